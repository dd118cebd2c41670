#include "cnoise/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cnoise/error.hpp"

namespace cnoise {

// =============================================================================
// Whiteness
// =============================================================================

WhitenessReport whiteness(const Latent& z, std::size_t bins) {
    if (bins < 2) fail(ErrorCode::invalid_argument, "whiteness needs at least 2 radial bins");
    const std::size_t H = z.height();
    const std::size_t W = z.width();
    const std::size_t plane = H * W;

    std::vector<std::size_t> bin_of(plane);
    WhitenessReport report;
    report.bins = bins;
    report.channels = z.channels();
    report.bin_counts.assign(bins, 0);
    for (std::size_t u = 0; u < H; ++u) {
        for (std::size_t v = 0; v < W; ++v) {
            const double r = normalized_radius(u, v, H, W);
            const auto k = std::min(bins - 1, static_cast<std::size_t>(std::floor(r * double(bins))));
            bin_of[u * W + v] = k;
            ++report.bin_counts[k];
        }
    }
    for (std::size_t k = 0; k < bins; ++k) {
        if (report.bin_counts[k] == 0) {
            fail(ErrorCode::invalid_argument, "radial bin " + std::to_string(k) + " of " + std::to_string(bins) +
                                                  " is empty on a " + std::to_string(H) + "x" + std::to_string(W) +
                                                  " grid; use fewer bins");
        }
    }

    const auto spectrum = spectrum_of(z);
    report.per_channel_band_power.assign(z.channels() * bins, 0.0);
    double sq = 0.0;
    for (std::size_t c = 0; c < z.channels(); ++c) {
        std::span<double> row(report.per_channel_band_power.data() + c * bins, bins);
        for (std::size_t i = 0; i < plane; ++i) row[bin_of[i]] += std::norm(spectrum[c * plane + i]);
        double total = 0.0;
        for (std::size_t k = 0; k < bins; ++k) {
            row[k] /= double(report.bin_counts[k]);
            total += row[k];
        }
        if (!(total > 0.0)) {
            fail(ErrorCode::undefined_normalization, "channel " + std::to_string(c) + " has no spectral power");
        }
        for (std::size_t k = 0; k < bins; ++k) {
            row[k] /= total;
            const double dev = row[k] - 1.0 / double(bins);
            sq += dev * dev;
        }
    }
    report.score = std::sqrt(sq / double(z.channels() * bins));
    return report;
}

// =============================================================================
// Earth mover's distance
// =============================================================================

std::vector<double> intensity_histogram(const RgbImage& img, std::size_t channel, std::size_t y0, std::size_t x0,
                                        std::size_t height, std::size_t width, std::size_t bins) {
    if (bins < 1 || bins > 256) fail(ErrorCode::invalid_argument, "histogram bins must lie in 1..256");
    std::vector<double> hist(bins, 0.0);
    for (std::size_t y = y0; y < y0 + height; ++y) {
        for (std::size_t x = x0; x < x0 + width; ++x) hist[std::size_t(img.at(y, x, channel)) * bins / 256] += 1.0;
    }
    const double n = double(height * width);
    for (double& h : hist) h /= n;
    return hist;
}

double wasserstein_1d(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty()) fail(ErrorCode::shape_mismatch, "histograms must share a nonempty bin grid");
    if (a.size() == 1) return 0.0;
    const double spacing = 255.0 / double(a.size() - 1);
    double cdf_a = 0.0;
    double cdf_b = 0.0;
    double work = 0.0;
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
        cdf_a += a[k];
        cdf_b += b[k];
        work += std::abs(cdf_a - cdf_b);
    }
    return work * spacing;
}

namespace {

double rgb_emd(const RgbImage& a, const RgbImage& b, std::size_t y0, std::size_t x0, std::size_t h, std::size_t w,
               std::size_t bins) {
    double total = 0.0;
    for (std::size_t ch = 0; ch < 3; ++ch) {
        total += wasserstein_1d(intensity_histogram(a, ch, y0, x0, h, w, bins),
                                intensity_histogram(b, ch, y0, x0, h, w, bins));
    }
    return total;
}

}  // namespace

EMDReport emd(const RgbImage& a, const RgbImage& b, std::size_t patch, std::size_t bins) {
    if (a.height() != b.height() || a.width() != b.width()) {
        fail(ErrorCode::shape_mismatch, "EMD images differ in size");
    }
    if (patch < 1 || a.height() % patch != 0 || a.width() % patch != 0) {
        fail(ErrorCode::invalid_argument, "patch size " + std::to_string(patch) + " does not divide image dims");
    }
    EMDReport report;
    report.patch_size = patch;
    report.bins = bins;
    for (std::size_t y = 0; y < a.height(); y += patch) {
        for (std::size_t x = 0; x < a.width(); x += patch) report.per_patch.push_back(rgb_emd(a, b, y, x, patch, patch, bins));
    }
    double sum = 0.0;
    for (double v : report.per_patch) sum += v;
    report.localized = sum / double(report.per_patch.size());
    report.global = rgb_emd(a, b, 0, 0, a.height(), a.width(), bins);
    return report;
}

// =============================================================================
// Band cosine similarity
// =============================================================================

BandCosine band_cosine(const Latent& a, const Latent& b, const BandSpec& spec) {
    require_same_shape(a, b, "band_cosine");
    const SpectrumBands ab = decompose(a, spec);
    const SpectrumBands bb = decompose(b, spec);
    auto cosine = [&](Band band) -> std::optional<double> {
        if (spec.count(band) == 0) return std::nullopt;
        const auto& x = ab.band(band);
        const auto& y = bb.band(band);
        double dot = 0.0, nx = 0.0, ny = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            dot += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
            nx += std::norm(x[i]);
            ny += std::norm(y[i]);
        }
        if (nx == 0.0 || ny == 0.0) return std::nullopt;
        return std::clamp(dot / std::sqrt(nx * ny), -1.0, 1.0);
    };
    return {cosine(Band::low), cosine(Band::mid), cosine(Band::high)};
}

// =============================================================================
// Silhouette
// =============================================================================

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values) : n_(n), d_(std::move(values)) {
    if (d_.size() != n * n) fail(ErrorCode::shape_mismatch, "distance matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (d_[i * n + i] != 0.0) fail(ErrorCode::invalid_argument, "distance matrix diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j) {
            const double v = d_[i * n + j];
            if (!std::isfinite(v) || v < 0.0) fail(ErrorCode::invalid_argument, "distances must be finite and >= 0");
            if (std::abs(v - d_[j * n + i]) > 1e-9) fail(ErrorCode::invalid_argument, "distance matrix is not symmetric");
        }
    }
}

double silhouette(const DistanceMatrix& d, std::span<const std::string> labels) {
    const std::size_t n = d.size();
    if (labels.size() != n) {
        fail(ErrorCode::shape_mismatch,
             std::to_string(labels.size()) + " labels for a " + std::to_string(n) + "-point distance matrix");
    }
    std::map<std::string, std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < n; ++i) clusters[labels[i]].push_back(i);
    if (clusters.size() < 2) fail(ErrorCode::invalid_argument, "silhouette needs at least two clusters");

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& own = clusters[labels[i]];
        if (own.size() == 1) continue;
        double a = 0.0;
        for (std::size_t j : own) a += d(i, j);
        a /= double(own.size() - 1);
        double b = INFINITY;
        for (const auto& [label, members] : clusters) {
            if (label == labels[i]) continue;
            double mean = 0.0;
            for (std::size_t j : members) mean += d(i, j);
            b = std::min(b, mean / double(members.size()));
        }
        const double denom = std::max(a, b);
        if (denom > 0.0) total += (b - a) / denom;
    }
    return total / double(n);
}

}  // namespace cnoise
