#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cnoise/image.hpp"

namespace cnoise {

struct SynthSpec {
    std::uint64_t seed = 0;
    std::size_t count = 1000;
    std::size_t height = 512;
    std::size_t width = 512;
    /// Circle radius range as fractions of min(height, width).
    double radius_min = 0.1;
    double radius_max = 0.45;

    void validate() const;
};

/// Everything sampled for one image. Pixel (y, x) is evaluated at its centre
/// (x + 0.5, y + 0.5); region index = 2 * [left of line] + [inside circle].
struct SynthParams {
    std::size_t index = 0;
    double circle_x = 0.0;
    double circle_y = 0.0;
    double radius = 0.0;  // pixels
    double line_x = 0.0;
    double line_y = 0.0;
    double line_angle = 0.0;  // radians in [0, pi)
    std::array<std::array<std::uint8_t, 3>, 4> colors{};
};

struct SynthImage {
    RgbImage image;
    SynthParams params;
};

/// Image `index` of the dataset; draws come from Philox stream `index` under the
/// spec's seed, so any image can be regenerated alone.
SynthImage generate_one(const SynthSpec& spec, std::size_t index);

std::vector<SynthImage> generate(const SynthSpec& spec);

/// Fraction of non-DC spectral energy (summed over RGB) at normalized radius
/// below `cutoff`.
double low_frequency_fraction(const RgbImage& image, double cutoff);

}  // namespace cnoise
