#include "cnoise/tensor_io.hpp"

#include <array>

#include "cnoise/error.hpp"
#include "cnoise/npy.hpp"

namespace cnoise {

Latent read_latent(const std::filesystem::path& path) {
    npy::Float32Array arr = npy::read_float32(path);
    if (arr.shape.size() != 3) {
        fail(ErrorCode::rank_mismatch,
             path.string() + " holds a rank-" + std::to_string(arr.shape.size()) + " array, expected 3");
    }
    return Latent(Shape{arr.shape[0], arr.shape[1], arr.shape[2]}, std::move(arr.values));
}

void write_latent(const Latent& z, const std::filesystem::path& path) {
    const std::array<std::size_t, 3> shape{z.channels(), z.height(), z.width()};
    npy::write_float32(path, shape, z.values());
}

Latent image_to_pseudolatent(const RgbImage& image, const Shape& target) {
    if (target.channels != 3 && target.channels != 4) {
        fail(ErrorCode::invalid_argument,
             "pseudolatent supports 3 or 4 channels, got " + std::to_string(target.channels));
    }
    if (target.height > image.height() || target.width > image.width()) {
        fail(ErrorCode::invalid_argument, "pseudolatent target " + target.str() + " exceeds image dims");
    }
    const std::size_t plane = target.plane();
    std::vector<double> out(target.size());
    for (std::size_t ch = 0; ch < 3; ++ch) {
        const auto small = area_downsample(image.channel(ch), image.height(), image.width(), target.height,
                                           target.width);
        for (std::size_t i = 0; i < plane; ++i) out[ch * plane + i] = small[i] / 127.5 - 1.0;
    }
    if (target.channels == 4) {
        for (std::size_t i = 0; i < plane; ++i) {
            out[3 * plane + i] = (out[i] + out[plane + i] + out[2 * plane + i]) / 3.0;
        }
    }
    return Latent::from_doubles(target, out);
}

Mask mask_from_pixels(const PngPixels& px, std::size_t target_height, std::size_t target_width) {
    std::vector<double> lum(px.height * px.width);
    for (std::size_t i = 0; i < lum.size(); ++i) {
        if (px.channels == 1) {
            lum[i] = px.data[i] / 255.0;
        } else {
            const auto* p = &px.data[i * px.channels];
            lum[i] = (0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]) / 255.0;
        }
    }
    const auto small = area_downsample(lum, px.height, px.width, target_height, target_width);
    return Mask(target_height, target_width, std::vector<float>(small.begin(), small.end()));
}

Mask read_mask(const std::filesystem::path& path, std::size_t target_height, std::size_t target_width) {
    return mask_from_pixels(read_png(path), target_height, target_width);
}

}  // namespace cnoise
