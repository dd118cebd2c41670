#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cnoise/fft.hpp"
#include "cnoise/latent.hpp"

namespace cnoise {

enum class Band : std::uint8_t { low = 0, mid = 1, high = 2 };

inline constexpr std::array<Band, 3> kAllBands{Band::low, Band::mid, Band::high};
std::string_view to_string(Band band);
Band parse_band(std::string_view name);

inline constexpr std::string_view kRadiusMetric = "euclidean-normalized";

/// Squared normalized radius of DFT bin (u, v) on an H x W grid. Signed
/// frequencies lie in [-0.5, 0.5) and the radius is divided by the corner
/// radius sqrt(0.5^2 + 0.5^2), so r = 1 only at the (H/2, W/2) Nyquist corner.
double normalized_radius_sq(std::size_t u, std::size_t v, std::size_t height, std::size_t width);
double normalized_radius(std::size_t u, std::size_t v, std::size_t height, std::size_t width);

/// Radial cutoffs and the per-bin band assignment they induce: low if r < alpha,
/// high if r > beta, mid otherwise. The DC bin is low iff alpha > 0.
class BandSpec {
public:
    BandSpec(double alpha, double beta, std::size_t height, std::size_t width);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    std::string_view radius_metric() const noexcept { return kRadiusMetric; }

    Band band_of(std::size_t u, std::size_t v) const { return labels_[u * width_ + v]; }
    Band band_at(std::size_t bin) const { return labels_[bin]; }
    /// Binary H x W mask (1 where the bin belongs to `band`).
    std::vector<std::uint8_t> mask(Band band) const;
    std::size_t count(Band band) const { return counts_[static_cast<std::size_t>(band)]; }

private:
    double alpha_;
    double beta_;
    std::size_t height_;
    std::size_t width_;
    std::vector<Band> labels_;
    std::array<std::size_t, 3> counts_{};
};

BandSpec make_band_spec(double alpha, double beta, std::size_t height, std::size_t width);

/// Full unnormalized DFT of each channel, C x H x W.
std::vector<Complex> spectrum_of(const Latent& z);

/// Complex C x H x W spectra split into low/mid/high. Each band is zero outside
/// its mask and the three sum to the source spectrum.
class SpectrumBands {
public:
    SpectrumBands(Shape shape, BandSpec spec, std::vector<Complex> low, std::vector<Complex> mid,
                  std::vector<Complex> high);

    const Shape& shape() const noexcept { return shape_; }
    const BandSpec& spec() const noexcept { return spec_; }
    const std::vector<Complex>& band(Band b) const { return bands_[static_cast<std::size_t>(b)]; }
    const std::vector<Complex>& low() const { return band(Band::low); }
    const std::vector<Complex>& mid() const { return band(Band::mid); }
    const std::vector<Complex>& high() const { return band(Band::high); }

    /// Copy with one band replaced.
    SpectrumBands with_band(Band b, std::vector<Complex> coefficients) const;
    /// Copy with one band multiplied by `factor`.
    SpectrumBands scaled(Band b, double factor) const;

private:
    Shape shape_;
    BandSpec spec_;
    std::array<std::vector<Complex>, 3> bands_;
};

/// F: per-channel DFT followed by band masking. Throws shape_mismatch when the
/// spec's grid differs from z's spatial dims.
SpectrumBands decompose(const Latent& z, const BandSpec& spec);

/// F^-1: inverse DFT of low + mid + high. Throws hermitian_violation if the
/// imaginary residual exceeds 1e-4 of the largest real magnitude.
Latent recompose(const SpectrumBands& bands);

/// Spatial-domain signal of one band (inverse DFT of that band alone), in
/// double precision. Comparing band signals is how band contents are checked
/// in latent units.
std::vector<double> band_signal(const SpectrumBands& bands, Band band);

/// max |band_signal(a, b) - band_signal(b, b)|.
double band_signal_diff(const SpectrumBands& a, const SpectrumBands& b, Band band);

/// Sum of |coef|^2 over one band, all channels.
double band_energy(const SpectrumBands& bands, Band band);

}  // namespace cnoise
