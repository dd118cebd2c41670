#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "cnoise/latent.hpp"

namespace cnoise {

enum class WaveletBasis { haar, db2 };

std::string_view to_string(WaveletBasis basis);
WaveletBasis parse_wavelet_basis(std::string_view name);

/// Real C x h x w planes, C-order. Sub-bands are not Latents: they may be
/// smaller than 2 x 2 at deep levels.
struct SubBand {
    std::size_t channels = 0;
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<double> values;
};

/// Detail sub-bands of one level. The first letter names the filter applied
/// along height, the second along width: LH is low-pass vertically and
/// high-pass horizontally, so it responds to vertical edges.
struct DetailLevel {
    SubBand lh;
    SubBand hl;
    SubBand hh;
};

/// J-level orthonormal DWT with periodic boundaries. highs[0] is the finest
/// level; ll is the residual after the last level.
struct WaveletPyramid {
    WaveletBasis basis = WaveletBasis::haar;
    std::size_t levels = 0;
    Shape original;        // shape before padding
    std::size_t padded_height = 0;
    std::size_t padded_width = 0;
    SubBand ll;
    std::vector<DetailLevel> highs;
};

/// Inputs whose dims are not multiples of 2^levels are padded by periodic
/// wrap-around first; the padding is recorded and cropped on recomposition.
WaveletPyramid dwt_decompose(const Latent& z, std::size_t levels, WaveletBasis basis);

Latent dwt_recompose(const WaveletPyramid& pyramid);

/// W^-1(gamma * LL_c, H_z): only the deepest LL comes from c.
Latent wavelet_colorful(const Latent& z, const Latent& c, std::size_t levels, double gamma,
                        WaveletBasis basis);

}  // namespace cnoise
