#pragma once

#include <cstdint>
#include <string_view>

#include "cnoise/latent.hpp"

namespace cnoise {

enum class NoiseKind { white, blue };

std::string_view to_string(NoiseKind kind);
NoiseKind parse_noise_kind(std::string_view name);

struct NoiseConfig {
    NoiseKind kind = NoiseKind::white;
    std::uint64_t seed = 0;
    Shape shape{4, 128, 128};
    double blue_cutoff = 0.25;
};

/// I.i.d. N(0,1) entries. Entry i (C-order) is taken from Philox block i/2
/// under the seed's key: the block's two 64-bit words feed one Box-Muller
/// pair, cosine branch for even i and sine branch for odd i.
Latent sample_white(const NoiseConfig& cfg);

/// White noise with every DFT bin of normalized radius < blue_cutoff zeroed,
/// then each channel rescaled to zero mean and unit variance.
Latent sample_blue(const NoiseConfig& cfg);

/// Dispatches on cfg.kind.
Latent sample_noise(const NoiseConfig& cfg);

}  // namespace cnoise
