#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cnoise/image.hpp"
#include "cnoise/latent.hpp"
#include "cnoise/spectral.hpp"

namespace cnoise {

// =============================================================================
// Whiteness
// =============================================================================

struct WhitenessReport {
    std::size_t bins = 0;
    std::size_t channels = 0;
    /// Row-major C x K, each row sums to 1.
    std::vector<double> per_channel_band_power;
    /// Occupancy of each radial bin (same for all channels).
    std::vector<std::size_t> bin_counts;
    double score = 0.0;
};

/// Radial PSD flatness. Per channel, |coef|^2 is accumulated into K equal-width
/// bins of normalized radius, each bin averaged over its occupancy and the row
/// normalized to sum 1. The score is the RMS deviation of all C*K entries from
/// 1/K. Throws undefined_normalization for an all-zero channel and
/// invalid_argument if some radial bin holds no DFT bins.
WhitenessReport whiteness(const Latent& z, std::size_t bins);

// =============================================================================
// Earth mover's distance
// =============================================================================

/// Normalized intensity histogram of one 8-bit channel over a rectangular
/// region. Bin k covers [256k/bins, 256(k+1)/bins).
std::vector<double> intensity_histogram(const RgbImage& img, std::size_t channel, std::size_t y0, std::size_t x0,
                                        std::size_t height, std::size_t width, std::size_t bins);

/// Exact 1-D Wasserstein-1 between two normalized histograms on the same bins,
/// with bin centres spread evenly over [0, 255].
double wasserstein_1d(std::span<const double> a, std::span<const double> b);

struct EMDReport {
    double localized = 0.0;
    double global = 0.0;
    std::size_t patch_size = 0;
    std::size_t bins = 0;
    std::vector<double> per_patch;  // row-major over the patch grid
};

/// Per-channel 1-D EMD summed over RGB, over aligned patch pairs (localized =
/// mean) and over the whole images (global).
EMDReport emd(const RgbImage& a, const RgbImage& b, std::size_t patch, std::size_t bins);

// =============================================================================
// Band cosine similarity
// =============================================================================

/// nullopt when the band is empty or either vector has zero norm.
struct BandCosine {
    std::optional<double> low;
    std::optional<double> mid;
    std::optional<double> high;
};

/// Cosine between band-masked spectra, each flattened over all channels as a
/// real vector of interleaved real and imaginary parts.
BandCosine band_cosine(const Latent& a, const Latent& b, const BandSpec& spec);

// =============================================================================
// Silhouette
// =============================================================================

/// Symmetric, non-negative N x N matrix with zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix(std::size_t n, std::vector<double> values);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<double> d_;
};

/// Mean silhouette; singleton clusters contribute 0.
double silhouette(const DistanceMatrix& d, std::span<const std::string> labels);

}  // namespace cnoise
