#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace cnoise::npy {

/// A little-endian float32, C-order array as stored in a .npy container.
struct Float32Array {
    std::vector<std::size_t> shape;
    std::vector<float> values;
};

/// Parses .npy versions 1.0 and 2.0. Only '<f4' C-order payloads are accepted.
Float32Array read_float32(const std::filesystem::path& path);

/// Writes a version 1.0 container, header padded so the payload starts on a
/// 64-byte boundary (the layout numpy itself produces).
void write_float32(const std::filesystem::path& path, std::span<const std::size_t> shape,
                   std::span<const float> values);

/// The exact header bytes (magic through trailing newline) written for `shape`.
std::string make_header(std::span<const std::size_t> shape);

}  // namespace cnoise::npy
