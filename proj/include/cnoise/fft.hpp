#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cnoise {

using Complex = std::complex<double>;

/// 2-D DFT of one row-major H x W plane. Forward is unnormalized; the inverse
/// carries the 1/(H*W) factor.
std::vector<Complex> fft2(std::span<const Complex> plane, std::size_t height, std::size_t width);
std::vector<Complex> fft2(std::span<const double> plane, std::size_t height, std::size_t width);
std::vector<Complex> ifft2(std::span<const Complex> spectrum, std::size_t height, std::size_t width);

}  // namespace cnoise
