#include "cnoise/philox.hpp"

#include <cmath>

namespace cnoise {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = std::uint64_t(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Counter Philox4x32::operator()(Counter x) const {
    Key k = key_;
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, x[0], hi0, lo0);
        mulhilo(kMul1, x[2], hi1, lo1);
        x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return x;
}

Philox4x32::Counter Philox4x32::block(std::uint64_t stream, std::uint64_t index) const {
    return (*this)(Counter{static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                           static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)});
}

double uniform_open(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = ((std::uint64_t(hi) << 32) | lo) >> 12;
    return (double(bits) + 0.5) * 0x1.0p-52;
}

std::array<double, 2> box_muller(std::uint64_t a, std::uint64_t b) {
    const double u1 = uniform_open(static_cast<std::uint32_t>(a >> 32), static_cast<std::uint32_t>(a));
    const double u2 = uniform_open(static_cast<std::uint32_t>(b >> 32), static_cast<std::uint32_t>(b));
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    return {radius * std::cos(theta), radius * std::sin(theta)};
}

std::uint32_t PhiloxStream::next_u32() {
    if (used_ == 4) {
        buffer_ = gen_.block(stream_, index_++);
        used_ = 0;
    }
    return buffer_[used_++];
}

double PhiloxStream::next_uniform() {
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    return double(((hi << 32) | lo) >> 11) * 0x1.0p-53;
}

}  // namespace cnoise
