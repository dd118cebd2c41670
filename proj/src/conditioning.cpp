#include "cnoise/conditioning.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cnoise/error.hpp"

namespace cnoise {

std::string_view to_string(Transform t) { return t == Transform::fft ? "fft" : "dwt"; }

Transform parse_transform(std::string_view name) {
    if (name == "fft") return Transform::fft;
    if (name == "dwt") return Transform::dwt;
    fail(ErrorCode::invalid_argument, "unknown transform '" + std::string(name) + "'");
}

void ConditioningConfig::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) fail(ErrorCode::invalid_argument, "alpha must lie in [0, 1]");
    if (!(std::isfinite(gamma) && gamma >= 0.0)) fail(ErrorCode::invalid_argument, "gamma must be finite and >= 0");
    if (!(interp_t >= 0.0 && interp_t <= 1.0)) fail(ErrorCode::invalid_argument, "t must lie in [0, 1]");
    if (transform == Transform::dwt && dwt_levels < 1) fail(ErrorCode::invalid_argument, "dwt levels must be >= 1");
}

Latent colorful_noise(const Latent& z, const Latent& c, const ConditioningConfig& cfg) {
    require_same_shape(z, c, "colorful_noise");
    cfg.validate();
    if (cfg.transform == Transform::dwt) {
        return wavelet_colorful(z, c, cfg.dwt_levels, cfg.gamma, cfg.dwt_basis);
    }
    const BandSpec spec(cfg.alpha, 1.0, z.height(), z.width());
    const SpectrumBands zb = decompose(z, spec);
    const SpectrumBands cb = decompose(c, spec);
    return recompose(zb.with_band(Band::low, cb.scaled(Band::low, cfg.gamma).low()));
}

Latent condition(const Latent& z, const Latent& c, const ConditioningConfig& cfg) {
    Latent out = colorful_noise(z, c, cfg);
    if (cfg.mask) out = masked_blend(z, out, *cfg.mask);
    if (cfg.interp_t < 1.0 || cfg.renorm) out = interpolate(z, out, cfg.interp_t, cfg.renorm);
    return out;
}

Latent inject_band(const Latent& z, const Latent& ref, Band band, const BandSpec& spec, double gamma) {
    require_same_shape(z, ref, "inject_band");
    if (!std::isfinite(gamma)) fail(ErrorCode::invalid_argument, "gamma must be finite");
    const SpectrumBands zb = decompose(z, spec);
    const SpectrumBands rb = decompose(ref, spec);
    return recompose(zb.with_band(band, rb.scaled(band, gamma).band(band)));
}

Latent mix_bands(const Latent& low_src, const Latent& mid_src, const Latent& high_src, const BandSpec& spec) {
    require_same_shape(low_src, mid_src, "mix_bands");
    require_same_shape(low_src, high_src, "mix_bands");
    return mix_bands(decompose(low_src, spec), decompose(mid_src, spec), decompose(high_src, spec));
}

Latent mix_bands(const SpectrumBands& low_src, const SpectrumBands& mid_src, const SpectrumBands& high_src) {
    if (low_src.shape() != mid_src.shape() || low_src.shape() != high_src.shape()) {
        fail(ErrorCode::shape_mismatch, "mix_bands: source shapes differ");
    }
    auto same_spec = [](const BandSpec& a, const BandSpec& b) { return a.alpha() == b.alpha() && a.beta() == b.beta(); };
    if (!same_spec(low_src.spec(), mid_src.spec()) || !same_spec(low_src.spec(), high_src.spec())) {
        fail(ErrorCode::invalid_argument, "mix_bands: sources were decomposed with different cutoffs");
    }
    return recompose(SpectrumBands(low_src.shape(), low_src.spec(), low_src.low(), mid_src.mid(), high_src.high()));
}

Latent masked_blend(const Latent& z, const Latent& zc, const Mask& mask) {
    require_same_shape(z, zc, "masked_blend");
    if (mask.height() != z.height() || mask.width() != z.width()) {
        fail(ErrorCode::shape_mismatch, "mask dims " + std::to_string(mask.height()) + "x" +
                                            std::to_string(mask.width()) + " do not match latent " + z.shape().str());
    }
    const std::size_t plane = z.shape().plane();
    std::vector<float> out(z.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const float m = mask.weights()[i % plane];
        out[i] = m * zc.values()[i] + (1.0f - m) * z.values()[i];
    }
    return Latent(z.shape(), std::move(out));
}

Latent interpolate(const Latent& z, const Latent& zc, double t, bool renorm) {
    require_same_shape(z, zc, "interpolate");
    if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::invalid_argument, "interpolation t must lie in [0, 1]");
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (1.0 - t) * double(z.values()[i]) + t * double(zc.values()[i]);
    }
    if (renorm) {
        const std::size_t plane = z.shape().plane();
        for (std::size_t c = 0; c < z.channels(); ++c) {
            auto moments = [plane](auto get) {
                double mean = 0.0, var = 0.0;
                for (std::size_t i = 0; i < plane; ++i) mean += get(i);
                mean /= double(plane);
                for (std::size_t i = 0; i < plane; ++i) var += (get(i) - mean) * (get(i) - mean);
                return std::pair{mean, var / double(plane)};
            };
            const auto [zmean, zvar] = moments([&](std::size_t i) { return double(z.values()[c * plane + i]); });
            const auto [omean, ovar] = moments([&](std::size_t i) { return out[c * plane + i]; });
            (void)zmean;
            if (!(ovar > 0.0)) fail(ErrorCode::undefined_normalization, "cannot renormalize a constant channel");
            const double scale = std::sqrt(zvar / ovar);
            for (std::size_t i = 0; i < plane; ++i) {
                out[c * plane + i] = omean + (out[c * plane + i] - omean) * scale;
            }
        }
    }
    return Latent::from_doubles(z.shape(), out);
}

double calibrate_gamma(const Latent& z, const Latent& c, double alpha) {
    require_same_shape(z, c, "calibrate_gamma");
    const BandSpec spec(alpha, 1.0, c.height(), c.width());
    if (spec.count(Band::low) == 0) fail(ErrorCode::invalid_argument, "low band is empty at alpha=" + std::to_string(alpha));
    const SpectrumBands bands = decompose(c, spec);
    const double e_c = band_energy(bands, Band::low);
    const double e_total = e_c + band_energy(bands, Band::mid) + band_energy(bands, Band::high);
    // float32 rounding leaves ~1e-15 of the energy in a band that was zeroed
    if (!(e_c > 1e-10 * e_total)) fail(ErrorCode::undefined_normalization, "conditioning latent has no low-band power");
    const double e_white = double(spec.count(Band::low)) * double(c.channels()) * double(c.shape().plane());
    return std::sqrt(e_white / e_c);
}

}  // namespace cnoise
