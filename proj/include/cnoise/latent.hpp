#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cnoise {

struct Shape {
    std::size_t channels = 0;
    std::size_t height = 0;
    std::size_t width = 0;

    std::size_t plane() const noexcept { return height * width; }
    std::size_t size() const noexcept { return channels * height * width; }
    std::string str() const;

    friend bool operator==(const Shape&, const Shape&) = default;
};

/// Real-valued C x H x W tensor in C-order. Every entry is finite and the shape
/// is fixed at construction; all noise and conditioning math produces new
/// latents rather than mutating existing ones.
class Latent {
public:
    Latent(Shape shape, std::vector<float> values);

    static Latent zeros(Shape shape);
    /// Rounds each value to float32.
    static Latent from_doubles(Shape shape, std::span<const double> values);

    const Shape& shape() const noexcept { return shape_; }
    std::size_t channels() const noexcept { return shape_.channels; }
    std::size_t height() const noexcept { return shape_.height; }
    std::size_t width() const noexcept { return shape_.width; }
    std::size_t size() const noexcept { return values_.size(); }

    std::span<const float> values() const noexcept { return values_; }
    std::span<const float> channel(std::size_t c) const;
    float at(std::size_t c, std::size_t h, std::size_t w) const {
        return values_[(c * shape_.height + h) * shape_.width + w];
    }

    std::vector<double> to_doubles() const;

    /// Bitwise equality of shape and values.
    friend bool operator==(const Latent& a, const Latent& b);

private:
    Shape shape_;
    std::vector<float> values_;
};

/// Throws shape_mismatch unless both latents have the same shape.
void require_same_shape(const Latent& a, const Latent& b, const char* what);

/// Max absolute elementwise difference; shapes must match.
double max_abs_diff(const Latent& a, const Latent& b);

/// Spatial H x W weights in [0, 1].
class Mask {
public:
    /// Values are clamped into [0, 1]; non-finite entries are rejected.
    Mask(std::size_t height, std::size_t width, std::vector<float> weights);

    static Mask filled(std::size_t height, std::size_t width, float value);

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    std::span<const float> weights() const noexcept { return weights_; }
    float at(std::size_t h, std::size_t w) const { return weights_[h * width_ + w]; }

private:
    std::size_t height_;
    std::size_t width_;
    std::vector<float> weights_;
};

}  // namespace cnoise
