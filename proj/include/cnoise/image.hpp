#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace cnoise {

/// 8-bit sRGB raster, interleaved RGB, row-major.
class RgbImage {
public:
    RgbImage(std::size_t height, std::size_t width, std::vector<std::uint8_t> pixels);
    RgbImage(std::size_t height, std::size_t width, std::array<std::uint8_t, 3> fill);

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
    std::span<std::uint8_t> pixels() noexcept { return pixels_; }

    std::uint8_t at(std::size_t h, std::size_t w, std::size_t ch) const {
        return pixels_[(h * width_ + w) * 3 + ch];
    }
    void set(std::size_t h, std::size_t w, std::array<std::uint8_t, 3> rgb);

    /// One channel as doubles, row-major H x W.
    std::vector<double> channel(std::size_t ch) const;

    friend bool operator==(const RgbImage&, const RgbImage&) = default;

private:
    std::size_t height_;
    std::size_t width_;
    std::vector<std::uint8_t> pixels_;
};

/// Decoded PNG before colour normalization: 1 (gray) or 3 (RGB) channels, 8 bit.
struct PngPixels {
    std::size_t height = 0;
    std::size_t width = 0;
    std::size_t channels = 0;
    std::vector<std::uint8_t> data;
};

/// Reads any PNG; palette and 16-bit inputs are reduced to 8-bit gray or RGB,
/// and alpha is composited onto black.
PngPixels read_png(const std::filesystem::path& path);
RgbImage read_png_rgb(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const RgbImage& image);

/// Box-filter resampling of a row-major plane to a smaller grid. Each output
/// cell averages the source area it covers, weighting partially covered
/// source pixels by their overlap, so non-integer ratios are handled exactly.
std::vector<double> area_downsample(std::span<const double> src, std::size_t height, std::size_t width,
                                    std::size_t target_height, std::size_t target_width);

}  // namespace cnoise
