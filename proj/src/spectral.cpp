#include "cnoise/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cnoise/error.hpp"

namespace cnoise {

std::string_view to_string(Band band) {
    switch (band) {
        case Band::low: return "low";
        case Band::mid: return "mid";
        case Band::high: return "high";
    }
    return "?";
}

Band parse_band(std::string_view name) {
    if (name == "low") return Band::low;
    if (name == "mid") return Band::mid;
    if (name == "high") return Band::high;
    fail(ErrorCode::invalid_argument, "unknown band '" + std::string(name) + "'");
}

// =============================================================================
// Radius and band masks
// =============================================================================

namespace {

// Signed integer frequency index in [-n/2, n/2).
long long signed_index(std::size_t k, std::size_t n) {
    const auto kk = static_cast<long long>(k);
    const auto nn = static_cast<long long>(n);
    return 2 * kk < nn ? kk : kk - nn;
}

}  // namespace

double normalized_radius_sq(std::size_t u, std::size_t v, std::size_t height, std::size_t width) {
    // r^2 = 2 (ku^2 W^2 + kv^2 H^2) / (H^2 W^2); numerator and denominator are
    // exact integers in double for any realistic grid, so cutoff ties resolve
    // identically for a bin and its negation.
    const double ku = double(signed_index(u, height));
    const double kv = double(signed_index(v, width));
    const double h = double(height);
    const double w = double(width);
    return 2.0 * (ku * ku * w * w + kv * kv * h * h) / (h * h * w * w);
}

double normalized_radius(std::size_t u, std::size_t v, std::size_t height, std::size_t width) {
    return std::sqrt(normalized_radius_sq(u, v, height, width));
}

BandSpec::BandSpec(double alpha, double beta, std::size_t height, std::size_t width)
    : alpha_(alpha), beta_(beta), height_(height), width_(width) {
    if (!(alpha >= 0.0 && alpha <= beta && beta <= 1.0)) {
        fail(ErrorCode::invalid_argument, "band cutoffs need 0 <= alpha <= beta <= 1, got alpha=" +
                                              std::to_string(alpha) + " beta=" + std::to_string(beta));
    }
    if (height < 2 || width < 2) fail(ErrorCode::invalid_argument, "band grid needs H, W >= 2");

    const double a2 = alpha * alpha;
    const double b2 = beta * beta;
    labels_.resize(height * width);
    for (std::size_t u = 0; u < height; ++u) {
        for (std::size_t v = 0; v < width; ++v) {
            const double r2 = normalized_radius_sq(u, v, height, width);
            Band b = Band::mid;
            if (r2 < a2) b = Band::low;
            else if (r2 > b2) b = Band::high;
            labels_[u * width + v] = b;
            ++counts_[static_cast<std::size_t>(b)];
        }
    }

    // Negation symmetry is what keeps band-wise recomposition real.
    for (std::size_t u = 0; u < height; ++u) {
        for (std::size_t v = 0; v < width; ++v) {
            if (labels_[u * width + v] != labels_[((height - u) % height) * width + (width - v) % width]) {
                fail(ErrorCode::invalid_argument, "band mask is not symmetric under frequency negation");
            }
        }
    }
}

std::vector<std::uint8_t> BandSpec::mask(Band band) const {
    std::vector<std::uint8_t> m(labels_.size());
    std::transform(labels_.begin(), labels_.end(), m.begin(), [band](Band b) { return b == band ? 1 : 0; });
    return m;
}

BandSpec make_band_spec(double alpha, double beta, std::size_t height, std::size_t width) {
    return BandSpec(alpha, beta, height, width);
}

// =============================================================================
// Decomposition
// =============================================================================

std::vector<Complex> spectrum_of(const Latent& z) {
    const std::size_t plane = z.shape().plane();
    std::vector<Complex> out(z.size());
    for (std::size_t c = 0; c < z.channels(); ++c) {
        const auto ch = z.channel(c);
        std::vector<double> vals(ch.begin(), ch.end());
        const auto spec = fft2(std::span<const double>(vals), z.height(), z.width());
        std::copy(spec.begin(), spec.end(), out.begin() + static_cast<std::ptrdiff_t>(c * plane));
    }
    return out;
}

SpectrumBands::SpectrumBands(Shape shape, BandSpec spec, std::vector<Complex> low, std::vector<Complex> mid,
                             std::vector<Complex> high)
    : shape_(shape), spec_(std::move(spec)), bands_{std::move(low), std::move(mid), std::move(high)} {
    if (spec_.height() != shape_.height || spec_.width() != shape_.width) {
        fail(ErrorCode::shape_mismatch, "band spec grid does not match spectrum shape " + shape_.str());
    }
    for (const auto& b : bands_) {
        if (b.size() != shape_.size()) fail(ErrorCode::shape_mismatch, "band size does not match " + shape_.str());
    }
    const std::size_t plane = shape_.plane();
    for (Band band : kAllBands) {
        const auto& coefs = bands_[static_cast<std::size_t>(band)];
        for (std::size_t i = 0; i < coefs.size(); ++i) {
            if (spec_.band_at(i % plane) != band && coefs[i] != Complex{}) {
                fail(ErrorCode::invalid_argument,
                     std::string(to_string(band)) + " band has energy outside its mask");
            }
        }
    }
}

SpectrumBands SpectrumBands::with_band(Band b, std::vector<Complex> coefficients) const {
    auto parts = bands_;
    parts[static_cast<std::size_t>(b)] = std::move(coefficients);
    return SpectrumBands(shape_, spec_, std::move(parts[0]), std::move(parts[1]), std::move(parts[2]));
}

SpectrumBands SpectrumBands::scaled(Band b, double factor) const {
    auto coefs = band(b);
    for (auto& v : coefs) v *= factor;
    return with_band(b, std::move(coefs));
}

SpectrumBands decompose(const Latent& z, const BandSpec& spec) {
    if (spec.height() != z.height() || spec.width() != z.width()) {
        fail(ErrorCode::shape_mismatch, "band spec grid " + std::to_string(spec.height()) + "x" +
                                            std::to_string(spec.width()) + " does not match latent " +
                                            z.shape().str());
    }
    const auto full = spectrum_of(z);
    const std::size_t plane = z.shape().plane();
    std::array<std::vector<Complex>, 3> parts;
    for (auto& p : parts) p.assign(full.size(), Complex{});
    for (std::size_t i = 0; i < full.size(); ++i) {
        parts[static_cast<std::size_t>(spec.band_at(i % plane))][i] = full[i];
    }
    return SpectrumBands(z.shape(), spec, std::move(parts[0]), std::move(parts[1]), std::move(parts[2]));
}

namespace {

// Inverse DFT of the given coefficient sum, with the imaginary residual checked.
std::vector<double> inverse_real(const Shape& shape, const std::vector<Complex>& coefs) {
    const std::size_t plane = shape.plane();
    std::vector<double> out(shape.size());
    double max_re = 0.0;
    double max_im = 0.0;
    for (std::size_t c = 0; c < shape.channels; ++c) {
        const auto spatial = ifft2(std::span<const Complex>(coefs).subspan(c * plane, plane), shape.height,
                                   shape.width);
        for (std::size_t i = 0; i < plane; ++i) {
            out[c * plane + i] = spatial[i].real();
            max_re = std::max(max_re, std::abs(spatial[i].real()));
            max_im = std::max(max_im, std::abs(spatial[i].imag()));
        }
    }
    if (max_im > 1e-4 * max_re) {
        fail(ErrorCode::hermitian_violation, "inverse transform has imaginary residual " +
                                                 std::to_string(max_im) + " against real peak " +
                                                 std::to_string(max_re));
    }
    return out;
}

}  // namespace

Latent recompose(const SpectrumBands& bands) {
    std::vector<Complex> sum(bands.shape().size());
    for (Band b : kAllBands) {
        const auto& coefs = bands.band(b);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += coefs[i];
    }
    return Latent::from_doubles(bands.shape(), inverse_real(bands.shape(), sum));
}

std::vector<double> band_signal(const SpectrumBands& bands, Band band) {
    return inverse_real(bands.shape(), bands.band(band));
}

double band_signal_diff(const SpectrumBands& a, const SpectrumBands& b, Band band) {
    if (a.shape() != b.shape()) fail(ErrorCode::shape_mismatch, "band_signal_diff: shapes differ");
    std::vector<Complex> diff(a.band(band));
    const auto& other = b.band(band);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= other[i];
    double worst = 0.0;
    for (double v : inverse_real(a.shape(), diff)) worst = std::max(worst, std::abs(v));
    return worst;
}

double band_energy(const SpectrumBands& bands, Band band) {
    double e = 0.0;
    for (const auto& v : bands.band(band)) e += std::norm(v);
    return e;
}

}  // namespace cnoise
