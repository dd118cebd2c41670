#include "cnoise/latent.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "cnoise/error.hpp"

namespace cnoise {

std::string Shape::str() const {
    return "(" + std::to_string(channels) + "," + std::to_string(height) + "," +
           std::to_string(width) + ")";
}

namespace {

void validate_shape(const Shape& shape) {
    if (shape.channels < 1 || shape.height < 2 || shape.width < 2) {
        fail(ErrorCode::invalid_argument,
             "latent shape " + shape.str() + " needs C >= 1, H >= 2, W >= 2");
    }
}

}  // namespace

Latent::Latent(Shape shape, std::vector<float> values) : shape_(shape), values_(std::move(values)) {
    validate_shape(shape_);
    if (values_.size() != shape_.size()) {
        fail(ErrorCode::shape_mismatch, "value count " + std::to_string(values_.size()) +
                                            " does not match shape " + shape_.str());
    }
    for (float v : values_) {
        if (!std::isfinite(v)) fail(ErrorCode::non_finite, "latent contains NaN or Inf");
    }
}

Latent Latent::zeros(Shape shape) { return Latent(shape, std::vector<float>(shape.size(), 0.0f)); }

Latent Latent::from_doubles(Shape shape, std::span<const double> values) {
    std::vector<float> out(values.size());
    std::transform(values.begin(), values.end(), out.begin(),
                   [](double v) { return static_cast<float>(v); });
    return Latent(shape, std::move(out));
}

std::span<const float> Latent::channel(std::size_t c) const {
    return std::span<const float>(values_).subspan(c * shape_.plane(), shape_.plane());
}

std::vector<double> Latent::to_doubles() const { return {values_.begin(), values_.end()}; }

bool operator==(const Latent& a, const Latent& b) {
    return a.shape_ == b.shape_ &&
           std::memcmp(a.values_.data(), b.values_.data(), a.values_.size() * sizeof(float)) == 0;
}

void require_same_shape(const Latent& a, const Latent& b, const char* what) {
    if (a.shape() != b.shape()) {
        fail(ErrorCode::shape_mismatch,
             std::string(what) + ": shapes " + a.shape().str() + " and " + b.shape().str() + " differ");
    }
}

double max_abs_diff(const Latent& a, const Latent& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(double(a.values()[i]) - double(b.values()[i])));
    }
    return worst;
}

Mask::Mask(std::size_t height, std::size_t width, std::vector<float> weights)
    : height_(height), width_(width), weights_(std::move(weights)) {
    if (height_ < 1 || width_ < 1) fail(ErrorCode::invalid_argument, "mask dims must be positive");
    if (weights_.size() != height_ * width_) {
        fail(ErrorCode::shape_mismatch, "mask weight count does not match dims");
    }
    for (float& v : weights_) {
        if (!std::isfinite(v)) fail(ErrorCode::non_finite, "mask contains NaN or Inf");
        v = std::clamp(v, 0.0f, 1.0f);
    }
}

Mask Mask::filled(std::size_t height, std::size_t width, float value) {
    return Mask(height, width, std::vector<float>(height * width, value));
}

}  // namespace cnoise
