#include "cnoise/image.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>

#include "cnoise/error.hpp"

namespace cnoise {

RgbImage::RgbImage(std::size_t height, std::size_t width, std::vector<std::uint8_t> pixels)
    : height_(height), width_(width), pixels_(std::move(pixels)) {
    if (height_ < 1 || width_ < 1) fail(ErrorCode::invalid_argument, "image dims must be positive");
    if (pixels_.size() != height_ * width_ * 3) {
        fail(ErrorCode::shape_mismatch, "pixel buffer does not match image dims");
    }
}

RgbImage::RgbImage(std::size_t height, std::size_t width, std::array<std::uint8_t, 3> fill)
    : RgbImage(height, width, std::vector<std::uint8_t>(height * width * 3)) {
    for (std::size_t i = 0; i < height * width; ++i) std::copy(fill.begin(), fill.end(), &pixels_[i * 3]);
}

void RgbImage::set(std::size_t h, std::size_t w, std::array<std::uint8_t, 3> rgb) {
    std::copy(rgb.begin(), rgb.end(), &pixels_[(h * width_ + w) * 3]);
}

std::vector<double> RgbImage::channel(std::size_t ch) const {
    std::vector<double> out(height_ * width_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = pixels_[i * 3 + ch];
    return out;
}

// =============================================================================
// PNG
// =============================================================================

PngPixels read_png(const std::filesystem::path& path) {
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&image, path.c_str())) {
        fail(ErrorCode::io_failure, "cannot read PNG " + path.string() + ": " + image.message);
    }
    const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
    image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;

    PngPixels out;
    out.height = image.height;
    out.width = image.width;
    out.channels = color ? 3 : 1;
    out.data.resize(PNG_IMAGE_SIZE(image));
    png_color black{0, 0, 0};
    if (!png_image_finish_read(&image, &black, out.data.data(), 0, nullptr)) {
        png_image_free(&image);
        fail(ErrorCode::io_failure, "cannot decode PNG " + path.string() + ": " + image.message);
    }
    return out;
}

RgbImage read_png_rgb(const std::filesystem::path& path) {
    PngPixels px = read_png(path);
    if (px.channels == 3) return RgbImage(px.height, px.width, std::move(px.data));
    std::vector<std::uint8_t> rgb(px.height * px.width * 3);
    for (std::size_t i = 0; i < px.height * px.width; ++i) {
        rgb[i * 3] = rgb[i * 3 + 1] = rgb[i * 3 + 2] = px.data[i];
    }
    return RgbImage(px.height, px.width, std::move(rgb));
}

void write_png(const std::filesystem::path& path, const RgbImage& img) {
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(img.width());
    image.height = static_cast<png_uint_32>(img.height());
    image.format = PNG_FORMAT_RGB;
    if (!png_image_write_to_file(&image, path.c_str(), 0, img.pixels().data(), 0, nullptr)) {
        fail(ErrorCode::io_failure, "cannot write PNG " + path.string() + ": " + image.message);
    }
}

// =============================================================================
// Area resampling
// =============================================================================

namespace {

// weights[t] lists (source index, overlap fraction of the output cell).
std::vector<std::vector<std::pair<std::size_t, double>>> box_weights(std::size_t src, std::size_t dst) {
    std::vector<std::vector<std::pair<std::size_t, double>>> weights(dst);
    const double scale = double(src) / double(dst);
    for (std::size_t t = 0; t < dst; ++t) {
        const double lo = double(t) * scale;
        const double hi = double(t + 1) * scale;
        const auto first = static_cast<std::size_t>(std::floor(lo));
        const auto last = std::min(src, static_cast<std::size_t>(std::ceil(hi)));
        for (std::size_t s = first; s < last; ++s) {
            const double overlap = std::min(hi, double(s + 1)) - std::max(lo, double(s));
            if (overlap > 0.0) weights[t].emplace_back(s, overlap / scale);
        }
    }
    return weights;
}

}  // namespace

std::vector<double> area_downsample(std::span<const double> src, std::size_t height, std::size_t width,
                                    std::size_t target_height, std::size_t target_width) {
    if (src.size() != height * width) fail(ErrorCode::shape_mismatch, "plane size does not match dims");
    if (target_height < 1 || target_width < 1 || target_height > height || target_width > width) {
        fail(ErrorCode::invalid_argument, "area_downsample target must be within 1..source dims");
    }
    const auto wy = box_weights(height, target_height);
    const auto wx = box_weights(width, target_width);

    std::vector<double> rows(height * target_width, 0.0);
    for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t tx = 0; tx < target_width; ++tx) {
            double acc = 0.0;
            for (auto [sx, w] : wx[tx]) acc += w * src[y * width + sx];
            rows[y * target_width + tx] = acc;
        }
    }
    std::vector<double> out(target_height * target_width, 0.0);
    for (std::size_t ty = 0; ty < target_height; ++ty) {
        for (auto [sy, w] : wy[ty]) {
            for (std::size_t tx = 0; tx < target_width; ++tx) {
                out[ty * target_width + tx] += w * rows[sy * target_width + tx];
            }
        }
    }
    return out;
}

}  // namespace cnoise
