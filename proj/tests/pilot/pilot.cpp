// Measures the corpora behind the frozen constants in thresholds.hpp.
// Seeds here are disjoint from the ones the tests use.

#include <algorithm>
#include <cstdio>
#include <vector>

#include "cnoise/metrics.hpp"
#include "cnoise/noise_gen.hpp"
#include "cnoise/synthset.hpp"

using namespace cnoise;

int main() {
    std::vector<double> white;
    for (std::uint64_t seed = 10000; seed < 10100; ++seed) {
        white.push_back(whiteness(sample_white({NoiseKind::white, seed, {4, 128, 128}, 0.25}), 16).score);
    }
    std::sort(white.begin(), white.end());
    std::printf("white whiteness K=16, seeds 10000..10099: min %.6f median %.6f max %.6f\n", white.front(),
                white[white.size() / 2], white.back());
    std::printf("  max + 50%% = %.6f\n", white.back() * 1.5);

    SynthSpec spec;
    spec.seed = 20240601;
    spec.count = 100;
    spec.height = 128;
    spec.width = 128;
    std::vector<double> frac;
    for (std::size_t i = 0; i < spec.count; ++i) frac.push_back(low_frequency_fraction(generate_one(spec, i).image, 0.125));
    std::sort(frac.begin(), frac.end());
    std::printf("synthset low-frequency fraction (r < 0.125), 100 pilot images at 128x128: min %.6f p1 %.6f median "
                "%.6f max %.6f\n",
                frac.front(), frac[0], frac[frac.size() / 2], frac.back());
    return 0;
}
