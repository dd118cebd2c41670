#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "cnoise/image.hpp"
#include "cnoise/latent.hpp"
#include "cnoise/noise_gen.hpp"
#include "cnoise/synthset.hpp"
#include "cnoise/tensor_io.hpp"

namespace fixtures {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / ("cnoise_" + tag + "_" + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline cnoise::Latent white(std::uint64_t seed, cnoise::Shape shape = {4, 128, 128}) {
    return cnoise::sample_white({cnoise::NoiseKind::white, seed, shape, 0.25});
}

inline cnoise::Latent blue(std::uint64_t seed, double cutoff = 0.25, cnoise::Shape shape = {4, 128, 128}) {
    return cnoise::sample_blue({cnoise::NoiseKind::blue, seed, shape, cutoff});
}

// Pseudolatent of a synthset image, the stand-in for an encoded natural image.
inline cnoise::Latent synth_pseudolatent(std::uint64_t seed, std::size_t index, cnoise::Shape shape = {4, 128, 128},
                                         std::size_t size = 512) {
    cnoise::SynthSpec spec;
    spec.seed = seed;
    spec.count = index + 1;
    spec.height = size;
    spec.width = size;
    return cnoise::image_to_pseudolatent(cnoise::generate_one(spec, index).image, shape);
}

// Black canvas with a few coloured strokes, as a user's sketch would look.
inline cnoise::RgbImage sketch(std::uint64_t seed, std::size_t size = 512) {
    std::mt19937_64 rng(seed);
    cnoise::RgbImage img(size, size, std::array<std::uint8_t, 3>{0, 0, 0});
    std::uniform_real_distribution<double> pos(0.0, double(size));
    std::uniform_int_distribution<int> col(0, 255);
    for (int stroke = 0; stroke < 6; ++stroke) {
        const double x0 = pos(rng), y0 = pos(rng), x1 = pos(rng), y1 = pos(rng);
        const std::array<std::uint8_t, 3> c{std::uint8_t(col(rng)), std::uint8_t(col(rng)), std::uint8_t(col(rng))};
        const double width = 6.0 + double(stroke) * 3.0;
        for (int s = 0; s <= 400; ++s) {
            const double t = s / 400.0;
            const double cx = x0 + t * (x1 - x0), cy = y0 + t * (y1 - y0);
            for (double dy = -width; dy <= width; dy += 1.0) {
                for (double dx = -width; dx <= width; dx += 1.0) {
                    const double x = cx + dx, y = cy + dy;
                    if (dx * dx + dy * dy > width * width || x < 0 || y < 0 || x >= double(size) || y >= double(size))
                        continue;
                    img.set(std::size_t(y), std::size_t(x), c);
                }
            }
        }
    }
    return img;
}

}  // namespace fixtures
