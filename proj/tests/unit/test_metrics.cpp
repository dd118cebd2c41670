#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "cnoise/error.hpp"
#include "cnoise/metrics.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "thresholds.hpp"

using namespace cnoise;
using Catch::Matchers::WithinAbs;

namespace {

Latent scaled(const Latent& z, double k) {
    auto v = z.to_doubles();
    for (auto& x : v) x *= k;
    return Latent::from_doubles(z.shape(), v);
}

std::vector<double> random_histogram(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> h(n);
    double s = 0.0;
    for (auto& v : h) s += (v = u(rng) < 0.25 ? 0.0 : u(rng));
    if (s == 0.0) h[0] = s = 1.0;
    for (auto& v : h) v /= s;
    return h;
}

std::vector<double> positions(std::size_t n) {
    std::vector<double> p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = n == 1 ? 0.0 : double(k) * 255.0 / double(n - 1);
    return p;
}

DistanceMatrix matrix_of(const std::vector<std::vector<double>>& d) {
    std::vector<double> flat;
    for (const auto& row : d) flat.insert(flat.end(), row.begin(), row.end());
    return DistanceMatrix(d.size(), flat);
}

std::vector<std::vector<double>> random_distances(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 5.0);
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = u(rng);
    return d;
}

}  // namespace

// =============================================================================
// Whiteness
// =============================================================================

TEST_CASE("flat spectrum scores zero") {
    // a spatial delta has |coef| = 1 everywhere
    std::vector<float> v(4 * 32 * 32, 0.0f);
    for (std::size_t c = 0; c < 4; ++c) v[c * 1024] = 1.0f;
    const auto r = whiteness(Latent({4, 32, 32}, v), 16);
    CHECK_THAT(r.score, WithinAbs(0.0, 1e-12));
    for (double p : r.per_channel_band_power) CHECK_THAT(p, WithinAbs(1.0 / 16.0, 1e-12));
}

TEST_CASE("DC-only latent gives the one-hot closed form") {
    const Latent z = Latent::from_doubles({4, 64, 64}, std::vector<double>(4 * 64 * 64, -2.5));
    const double want = std::sqrt((15.0 * (1.0 / 16) * (1.0 / 16) + (15.0 / 16) * (15.0 / 16)) / 16.0);
    CHECK_THAT(whiteness(z, 16).score, WithinAbs(want, 1e-12));
    CHECK_THAT(want, WithinAbs(0.2421, 1e-4));
}

TEST_CASE("whiteness rows match a naive-DFT oracle") {
    const Latent z = fixtures::white(3, {2, 12, 10});
    const auto r = whiteness(z, 4);
    double sq = 0.0;
    for (std::size_t c = 0; c < 2; ++c) {
        const auto ch = z.channel(c);
        const auto want = oracle::whiteness_rows(std::vector<double>(ch.begin(), ch.end()), 12, 10, 4);
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK_THAT(r.per_channel_band_power[c * 4 + k], WithinAbs(want[k], 1e-12));
            sq += (want[k] - 0.25) * (want[k] - 0.25);
        }
    }
    CHECK_THAT(r.score, WithinAbs(std::sqrt(sq / 8.0), 1e-12));
}

TEST_CASE("whiteness rows sum to one and the score is scale invariant") {
    const Latent z = fixtures::synth_pseudolatent(2, 0);
    const auto r = whiteness(z, 16);
    for (std::size_t c = 0; c < 4; ++c) {
        double s = 0.0;
        for (std::size_t k = 0; k < 16; ++k) s += r.per_channel_band_power[c * 16 + k];
        CHECK_THAT(s, WithinAbs(1.0, 1e-6));
    }
    CHECK(r.score >= 0.0);
    for (double k : {-3.7, 0.01, 250.0}) CHECK_THAT(whiteness(scaled(z, k), 16).score, WithinAbs(r.score, 1e-9));
}

TEST_CASE("white latents fall below the simulated threshold") {
    for (std::uint64_t seed = 600; seed < 620; ++seed) {
        const double s = whiteness(fixtures::white(seed), 16).score;
        CHECK(s < thresholds::kWhiteWhiteness);
        CHECK(s < 0.02);
    }
}

TEST_CASE("whiteness errors") {
    std::vector<float> v(2 * 16 * 16, 1.0f);
    std::fill(v.begin() + 256, v.end(), 0.0f);
    CHECK_THROWS_AS(whiteness(Latent({2, 16, 16}, v), 4), Error);
    CHECK_THROWS_AS(whiteness(fixtures::white(1, {1, 16, 16}), 1), Error);
    CHECK_THROWS_AS(whiteness(fixtures::white(1, {1, 4, 4}), 16), Error);
}

// =============================================================================
// EMD
// =============================================================================

TEST_CASE("1-D Wasserstein equals the transportation LP") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + std::size_t(trial % 7);
        const auto a = random_histogram(rng, n), b = random_histogram(rng, n);
        CHECK_THAT(wasserstein_1d(a, b), WithinAbs(oracle::transport_lp(a, b, positions(n)), 1e-9));
    }
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_histogram(rng, 3), b = random_histogram(rng, 3);
        CHECK_THAT(wasserstein_1d(a, b), WithinAbs(oracle::transport_lp(a, b, positions(3)), 1e-9));
    }
}

TEST_CASE("1-D Wasserstein is a metric") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_histogram(rng, 8), b = random_histogram(rng, 8), c = random_histogram(rng, 8);
        CHECK(wasserstein_1d(a, b) == wasserstein_1d(b, a));
        CHECK(wasserstein_1d(a, c) <= wasserstein_1d(a, b) + wasserstein_1d(b, c) + 1e-9);
        CHECK(wasserstein_1d(a, a) == 0.0);
        if (a != b) CHECK(wasserstein_1d(a, b) > 0.0);
    }
}

TEST_CASE("EMD of identical and opposite images") {
    const RgbImage a = fixtures::sketch(3, 128);
    const EMDReport same = emd(a, a, 64, 32);
    CHECK(same.localized == 0.0);
    CHECK(same.global == 0.0);
    CHECK(same.per_patch.size() == 4);
    for (double p : same.per_patch) CHECK(p == 0.0);

    const RgbImage black(128, 128, std::array<std::uint8_t, 3>{0, 0, 0});
    const RgbImage white(128, 128, std::array<std::uint8_t, 3>{255, 255, 255});
    for (std::size_t bins : {8, 32}) {
        const EMDReport r = emd(black, white, 64, bins);
        CHECK_THAT(r.global, WithinAbs(765.0, 1e-9));
        CHECK_THAT(r.localized, WithinAbs(765.0, 1e-9));
        for (double p : r.per_patch) CHECK_THAT(p, WithinAbs(765.0, 1e-9));
    }
}

TEST_CASE("localized EMD is the patch mean") {
    const RgbImage a = fixtures::sketch(4, 128), b = fixtures::sketch(5, 128);
    const EMDReport r = emd(a, b, 32, 32);
    REQUIRE(r.per_patch.size() == 16);
    double s = 0.0;
    for (double p : r.per_patch) {
        CHECK(p >= 0.0);
        s += p;
    }
    CHECK_THAT(r.localized, WithinAbs(s / 16.0, 1e-9));
    CHECK(r.global >= 0.0);
    CHECK(r.global <= r.localized + 1e-9);
}

TEST_CASE("histograms and EMD argument checks") {
    RgbImage img(4, 4, std::array<std::uint8_t, 3>{0, 128, 255});
    const auto h = intensity_histogram(img, 1, 0, 0, 4, 4, 4);
    CHECK(h == std::vector<double>{0.0, 0.0, 1.0, 0.0});
    CHECK_THROWS_AS(emd(img, RgbImage(4, 8, std::array<std::uint8_t, 3>{}), 2, 8), Error);
    CHECK_THROWS_AS(emd(img, img, 3, 8), Error);
    CHECK_THROWS_AS(emd(img, img, 2, 0), Error);
}

// =============================================================================
// Band cosine
// =============================================================================

TEST_CASE("band cosine of a latent with itself and its negation") {
    const Latent a = fixtures::white(1);
    const BandSpec spec(0.25, 0.75, 128, 128);
    const auto same = band_cosine(a, a, spec);
    const auto neg = band_cosine(a, scaled(a, -1.0), spec);
    for (const auto* r : {&same, &neg}) REQUIRE((r->low && r->mid && r->high));
    CHECK_THAT(*same.low, WithinAbs(1.0, 1e-6));
    CHECK_THAT(*same.mid, WithinAbs(1.0, 1e-6));
    CHECK_THAT(*same.high, WithinAbs(1.0, 1e-6));
    CHECK_THAT(*neg.low, WithinAbs(-1.0, 1e-6));
    CHECK_THAT(*neg.mid, WithinAbs(-1.0, 1e-6));
    CHECK_THAT(*neg.high, WithinAbs(-1.0, 1e-6));
}

TEST_CASE("independent white latents are nearly orthogonal in every band") {
    const BandSpec spec(0.25, 0.75, 128, 128);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto r = band_cosine(fixtures::white(2 * i + 7000), fixtures::white(2 * i + 7001), spec);
        for (const auto& v : {r.low, r.mid, r.high}) {
            REQUIRE(v);
            worst = std::max(worst, std::abs(*v));
        }
    }
    CHECK(worst < 0.05);
}

TEST_CASE("band cosine scale invariance and empty bands") {
    const Latent a = fixtures::white(2), b = fixtures::synth_pseudolatent(1, 2);
    const BandSpec spec(0.25, 0.75, 128, 128);
    const auto r = band_cosine(a, b, spec);
    // power-of-two factors keep the scaled float32 latents exact
    const auto rs = band_cosine(scaled(a, 4.0), scaled(b, 0.125), spec);
    CHECK_THAT(*rs.low, WithinAbs(*r.low, 1e-12));
    CHECK_THAT(*rs.mid, WithinAbs(*r.mid, 1e-12));
    CHECK_THAT(*rs.high, WithinAbs(*r.high, 1e-12));

    const auto open = band_cosine(a, b, BandSpec(0.25, 1.0, 128, 128));
    CHECK(open.low.has_value());
    CHECK_FALSE(open.high.has_value());
    CHECK_FALSE(band_cosine(a, b, BandSpec(0.0, 1.0, 128, 128)).low.has_value());
    CHECK_THROWS_AS(band_cosine(a, fixtures::white(1, {4, 64, 64}), spec), Error);
}

// =============================================================================
// Silhouette
// =============================================================================

TEST_CASE("two tight far-apart pairs score 0.99") {
    const auto d = matrix_of({{0, 0.1, 10, 10}, {0.1, 0, 10, 10}, {10, 10, 0, 0.1}, {10, 10, 0.1, 0}});
    const std::vector<std::string> labels{"a", "a", "b", "b"};
    CHECK_THAT(silhouette(d, labels), WithinAbs(0.99, 1e-12));
}

TEST_CASE("equal distances score zero") {
    std::vector<std::vector<double>> d(6, std::vector<double>(6, 1.0));
    for (std::size_t i = 0; i < 6; ++i) d[i][i] = 0.0;
    const std::vector<std::string> labels{"x", "x", "y", "y", "z", "z"};
    CHECK_THAT(silhouette(matrix_of(d), labels), WithinAbs(0.0, 1e-15));
}

TEST_CASE("silhouette matches the direct formula and stays in range") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + std::size_t(trial % 6);
        const auto d = random_distances(rng, n);
        std::vector<std::string> labels(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = std::string(1, char('a' + (i * 7 + std::size_t(trial)) % 3));
        labels[0] = "a";
        labels[1] = "b";
        const double s = silhouette(matrix_of(d), labels);
        CHECK_THAT(s, WithinAbs(oracle::silhouette_direct(d, labels), 1e-12));
        CHECK((s >= -1.0 && s <= 1.0));

        auto big = d;
        for (auto& row : big)
            for (auto& v : row) v *= 40.0;
        CHECK_THAT(silhouette(matrix_of(big), labels), WithinAbs(s, 1e-12));
    }
}

TEST_CASE("silhouette argument checks") {
    const auto d = matrix_of({{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
    const std::vector<std::string> one{"a", "a", "a"};
    const std::vector<std::string> two{"a", "b"};
    CHECK_THROWS_AS(silhouette(d, one), Error);
    CHECK_THROWS_AS(silhouette(d, two), Error);
    CHECK_THROWS_AS(DistanceMatrix(2, {0, 1, 2, 0}), Error);
    CHECK_THROWS_AS(DistanceMatrix(2, {1, 1, 1, 0}), Error);
    CHECK_THROWS_AS(DistanceMatrix(2, {0, -1, -1, 0}), Error);
    CHECK_THROWS_AS(DistanceMatrix(2, {0, 1, 1}), Error);
    CHECK_NOTHROW(DistanceMatrix(2, {0, 1, 1 + 1e-12, 0}));
}
