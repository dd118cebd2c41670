#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "cnoise/latent.hpp"
#include "cnoise/noise_gen.hpp"
#include "cnoise/spectral.hpp"
#include "cnoise/wavelet.hpp"

namespace cnoise {

enum class Transform { fft, dwt };

std::string_view to_string(Transform t);
Transform parse_transform(std::string_view name);

struct ConditioningConfig {
    double alpha = 0.125;
    double gamma = 0.2;
    Transform transform = Transform::fft;
    std::size_t dwt_levels = 3;
    WaveletBasis dwt_basis = WaveletBasis::haar;
    std::optional<Mask> mask;
    double interp_t = 1.0;
    bool renorm = false;
    NoiseConfig base_noise;

    void validate() const;
};

/// z^c = F^-1(gamma * c_L, z_M, z_H) with beta fixed at 1, so everything at or
/// above alpha comes from z. The dwt transform delegates to wavelet_colorful.
/// Mask and interpolation settings in cfg are ignored here; see condition().
Latent colorful_noise(const Latent& z, const Latent& c, const ConditioningConfig& cfg);

/// colorful_noise, then masked_blend against z when cfg.mask is set, then
/// interpolate(z, ., cfg.interp_t) when interp_t < 1.
Latent condition(const Latent& z, const Latent& c, const ConditioningConfig& cfg);

/// Replaces one band of z by gamma times the same band of ref.
Latent inject_band(const Latent& z, const Latent& ref, Band band, const BandSpec& spec, double gamma);

/// F^-1(low of low_src, mid of mid_src, high of high_src).
Latent mix_bands(const Latent& low_src, const Latent& mid_src, const Latent& high_src, const BandSpec& spec);
/// Same on already decomposed sources (all must share one spec and shape).
Latent mix_bands(const SpectrumBands& low_src, const SpectrumBands& mid_src, const SpectrumBands& high_src);

/// mask * zc + (1 - mask) * z, per spatial position, all channels.
Latent masked_blend(const Latent& z, const Latent& zc, const Mask& mask);

/// (1 - t) z + t zc. With renorm, each output channel is rescaled about its
/// mean to the variance of the matching channel of z.
Latent interpolate(const Latent& z, const Latent& zc, double t, bool renorm = false);

/// gamma* = sqrt(E_white / E_c), where E_c = sum |c_L|^2 under (alpha, 1) and
/// E_white = (#low bins) * C * H * W is the expected low-band power of unit
/// white noise under the unnormalized forward DFT. z only fixes the shape.
double calibrate_gamma(const Latent& z, const Latent& c, double alpha);

}  // namespace cnoise
