#pragma once

// Frozen from tests/pilot/pilot.cpp. Rerun it to see where they come from.
namespace thresholds {

// Whiteness (K=16) of white 4x128x128 latents, seeds 10000..10099:
// max 0.006127, plus 50%.
inline constexpr double kWhiteWhiteness = 0.0092;

// Low-frequency energy fraction (r < 0.125, DC excluded) of 100 pilot synthset
// images at 128x128, seed 20240601: 1st percentile 0.854962, minus 0.05.
inline constexpr double kSynthLowFraction = 0.80;

}  // namespace thresholds
