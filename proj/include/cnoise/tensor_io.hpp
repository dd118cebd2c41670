#pragma once

#include <filesystem>

#include "cnoise/image.hpp"
#include "cnoise/latent.hpp"

namespace cnoise {

/// Reads a 3-D '<f4' .npy file. Errors: malformed_header, unsupported_dtype,
/// rank_mismatch, non_finite, io_failure.
Latent read_latent(const std::filesystem::path& path);

/// Writes shape (C,H,W), little-endian float32, C-order. Existing files are replaced.
void write_latent(const Latent& z, const std::filesystem::path& path);

/// VAE-free stand-in for an encoded image: each RGB channel is area-downsampled
/// to H x W and mapped linearly from [0,255] to [-1,1]. With C = 4 the fourth
/// channel is the mean of the three mapped channels.
Latent image_to_pseudolatent(const RgbImage& image, const Shape& target);

/// Luminance (Rec. 601 weights for RGB input) mapped to [0,1] and
/// area-downsampled to target dims. Weights stay soft.
Mask mask_from_pixels(const PngPixels& pixels, std::size_t target_height, std::size_t target_width);
Mask read_mask(const std::filesystem::path& path, std::size_t target_height, std::size_t target_width);

}  // namespace cnoise
