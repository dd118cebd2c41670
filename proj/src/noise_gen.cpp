#include "cnoise/noise_gen.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cnoise/error.hpp"
#include "cnoise/fft.hpp"
#include "cnoise/philox.hpp"
#include "cnoise/spectral.hpp"

namespace cnoise {

std::string_view to_string(NoiseKind kind) { return kind == NoiseKind::white ? "white" : "blue"; }

NoiseKind parse_noise_kind(std::string_view name) {
    if (name == "white") return NoiseKind::white;
    if (name == "blue") return NoiseKind::blue;
    fail(ErrorCode::invalid_argument, "unknown noise kind '" + std::string(name) + "'");
}

namespace {

void validate_shape(const Shape& s) {
    if (s.channels < 1 || s.height < 2 || s.width < 2) {
        fail(ErrorCode::invalid_argument, "noise shape " + s.str() + " needs C >= 1, H >= 2, W >= 2");
    }
}

std::vector<double> white_values(std::uint64_t seed, std::size_t count) {
    const auto gen = Philox4x32::from_seed(seed);
    std::vector<double> out(count);
    for (std::size_t pair = 0; 2 * pair < count; ++pair) {
        const auto x = gen.block(0, pair);
        const auto n = box_muller((std::uint64_t(x[0]) << 32) | x[1], (std::uint64_t(x[2]) << 32) | x[3]);
        out[2 * pair] = n[0];
        if (2 * pair + 1 < count) out[2 * pair + 1] = n[1];
    }
    return out;
}

}  // namespace

Latent sample_white(const NoiseConfig& cfg) {
    if (cfg.kind != NoiseKind::white) fail(ErrorCode::invalid_argument, "sample_white needs kind=white");
    validate_shape(cfg.shape);
    return Latent::from_doubles(cfg.shape, white_values(cfg.seed, cfg.shape.size()));
}

Latent sample_blue(const NoiseConfig& cfg) {
    if (cfg.kind != NoiseKind::blue) fail(ErrorCode::invalid_argument, "sample_blue needs kind=blue");
    validate_shape(cfg.shape);
    if (!(cfg.blue_cutoff > 0.0 && cfg.blue_cutoff < 1.0)) {
        fail(ErrorCode::invalid_argument, "blue noise cutoff must lie in (0, 1)");
    }
    const Shape& s = cfg.shape;
    const std::size_t plane = s.plane();
    const double cutoff_sq = cfg.blue_cutoff * cfg.blue_cutoff;
    auto values = white_values(cfg.seed, s.size());

    for (std::size_t c = 0; c < s.channels; ++c) {
        std::span<double> ch(values.data() + c * plane, plane);
        auto spec = fft2(std::span<const double>(ch), s.height, s.width);
        for (std::size_t u = 0; u < s.height; ++u) {
            for (std::size_t v = 0; v < s.width; ++v) {
                if (normalized_radius_sq(u, v, s.height, s.width) < cutoff_sq) spec[u * s.width + v] = {};
            }
        }
        const auto spatial = ifft2(spec, s.height, s.width);
        double mean = 0.0;
        for (std::size_t i = 0; i < plane; ++i) mean += spatial[i].real();
        mean /= double(plane);
        double var = 0.0;
        for (std::size_t i = 0; i < plane; ++i) var += (spatial[i].real() - mean) * (spatial[i].real() - mean);
        var /= double(plane);
        if (!(var > 0.0)) fail(ErrorCode::undefined_normalization, "blue noise channel has zero variance");
        const double scale = 1.0 / std::sqrt(var);
        for (std::size_t i = 0; i < plane; ++i) ch[i] = (spatial[i].real() - mean) * scale;
    }
    return Latent::from_doubles(s, values);
}

Latent sample_noise(const NoiseConfig& cfg) {
    return cfg.kind == NoiseKind::white ? sample_white(cfg) : sample_blue(cfg);
}

}  // namespace cnoise
