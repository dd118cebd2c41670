#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace cnoise {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123). Output is
/// a pure function of (key, counter), which is what makes latents and
/// synthetic datasets reproducible across machines and thread schedules.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    explicit constexpr Philox4x32(Key key) : key_(key) {}
    /// Key words are the low and high halves of the 64-bit seed.
    static constexpr Philox4x32 from_seed(std::uint64_t seed) {
        return Philox4x32(Key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
    }

    Counter operator()(Counter counter) const;

    /// Block at a 64-bit index within a 64-bit stream: counter = {index lo,
    /// index hi, stream lo, stream hi}.
    Counter block(std::uint64_t stream, std::uint64_t index) const;

private:
    Key key_;
};

/// Name recorded in run manifests for the normal sampler built on top of Philox.
inline constexpr std::string_view kGeneratorName = "philox4x32-10+box-muller-f64";

/// Uniform in the open interval (0, 1) from the top 52 bits of two 32-bit words:
/// (k + 0.5) / 2^52, so both ends are exactly representable and excluded.
double uniform_open(std::uint32_t hi, std::uint32_t lo);

/// Two standard normals per Philox block via Box-Muller on two open uniforms.
std::array<double, 2> box_muller(std::uint64_t a, std::uint64_t b);

/// Sequential draw helper over one Philox stream: each call consumes the next
/// 32-bit word.
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream) : gen_(Philox4x32::from_seed(seed)), stream_(stream) {}

    std::uint32_t next_u32();
    /// Uniform in [0, 1) with 53 bits.
    double next_uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }

private:
    Philox4x32 gen_;
    std::uint64_t stream_;
    std::uint64_t index_ = 0;
    Philox4x32::Counter buffer_{};
    int used_ = 4;
};

}  // namespace cnoise
