#include "cnoise/synthset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cnoise/error.hpp"
#include "cnoise/fft.hpp"
#include "cnoise/philox.hpp"
#include "cnoise/spectral.hpp"

namespace cnoise {

void SynthSpec::validate() const {
    if (count < 1) fail(ErrorCode::invalid_argument, "synthset count must be >= 1");
    if (height < 2 || width < 2) fail(ErrorCode::invalid_argument, "synthset images need H, W >= 2");
    if (!(radius_min >= 0.1 && radius_min <= radius_max && radius_max <= 0.45)) {
        fail(ErrorCode::invalid_argument, "radius range must satisfy 0.1 <= min <= max <= 0.45");
    }
}

SynthImage generate_one(const SynthSpec& spec, std::size_t index) {
    spec.validate();
    PhiloxStream rng(spec.seed, index);
    const double H = double(spec.height);
    const double W = double(spec.width);

    SynthParams p;
    p.index = index;
    p.circle_x = rng.uniform(0.0, W);
    p.circle_y = rng.uniform(0.0, H);
    p.radius = rng.uniform(spec.radius_min, spec.radius_max) * std::min(H, W);
    p.line_x = rng.uniform(0.0, W);
    p.line_y = rng.uniform(0.0, H);
    p.line_angle = rng.uniform(0.0, M_PI);
    for (auto& color : p.colors) {
        const std::uint32_t bits = rng.next_u32();
        color = {static_cast<std::uint8_t>(bits >> 16), static_cast<std::uint8_t>(bits >> 8),
                 static_cast<std::uint8_t>(bits)};
    }

    const double dx = std::cos(p.line_angle);
    const double dy = std::sin(p.line_angle);
    const double r2 = p.radius * p.radius;
    RgbImage img(spec.height, spec.width, std::array<std::uint8_t, 3>{0, 0, 0});
    for (std::size_t y = 0; y < spec.height; ++y) {
        const double py = double(y) + 0.5;
        for (std::size_t x = 0; x < spec.width; ++x) {
            const double px = double(x) + 0.5;
            const bool left = dx * (py - p.line_y) - dy * (px - p.line_x) >= 0.0;
            const double cx = px - p.circle_x;
            const double cy = py - p.circle_y;
            const bool inside = cx * cx + cy * cy < r2;
            img.set(y, x, p.colors[(left ? 2 : 0) + (inside ? 1 : 0)]);
        }
    }
    return {std::move(img), p};
}

std::vector<SynthImage> generate(const SynthSpec& spec) {
    spec.validate();
    std::vector<SynthImage> out;
    out.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) out.push_back(generate_one(spec, i));
    return out;
}

double low_frequency_fraction(const RgbImage& image, double cutoff) {
    const std::size_t H = image.height();
    const std::size_t W = image.width();
    const double cutoff_sq = cutoff * cutoff;
    double low = 0.0;
    double total = 0.0;
    for (std::size_t ch = 0; ch < 3; ++ch) {
        const auto spec = fft2(std::span<const double>(image.channel(ch)), H, W);
        for (std::size_t u = 0; u < H; ++u) {
            for (std::size_t v = 0; v < W; ++v) {
                if (u == 0 && v == 0) continue;
                const double p = std::norm(spec[u * W + v]);
                total += p;
                if (normalized_radius_sq(u, v, H, W) < cutoff_sq) low += p;
            }
        }
    }
    return total > 0.0 ? low / total : 1.0;
}

}  // namespace cnoise
