#include "cnoise/wavelet.hpp"

#include <cmath>
#include <span>
#include <string>

#include "cnoise/error.hpp"

namespace cnoise {

std::string_view to_string(WaveletBasis basis) { return basis == WaveletBasis::haar ? "haar" : "db2"; }

WaveletBasis parse_wavelet_basis(std::string_view name) {
    if (name == "haar") return WaveletBasis::haar;
    if (name == "db2") return WaveletBasis::db2;
    fail(ErrorCode::invalid_argument, "unknown wavelet basis '" + std::string(name) + "'");
}

namespace {

std::vector<double> lowpass(WaveletBasis basis) {
    if (basis == WaveletBasis::haar) return {M_SQRT1_2, M_SQRT1_2};
    const double s3 = std::sqrt(3.0);
    const double k = 1.0 / (4.0 * M_SQRT2);
    return {(1 + s3) * k, (3 + s3) * k, (3 - s3) * k, (1 - s3) * k};
}

// Quadrature mirror of the low-pass filter.
std::vector<double> highpass(const std::vector<double>& h) {
    std::vector<double> g(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) g[j] = (j % 2 == 0 ? 1.0 : -1.0) * h[h.size() - 1 - j];
    return g;
}

struct Filters {
    std::vector<double> lo;
    std::vector<double> hi;
};

Filters filters_for(WaveletBasis basis) {
    auto lo = lowpass(basis);
    auto hi = highpass(lo);
    return {std::move(lo), std::move(hi)};
}

// One periodic analysis step over n samples spaced `stride` apart.
void analyze_1d(const Filters& f, const double* x, std::size_t n, std::size_t stride, double* a, double* d,
                std::size_t out_stride) {
    const std::size_t half = n / 2;
    for (std::size_t k = 0; k < half; ++k) {
        double sa = 0.0;
        double sd = 0.0;
        for (std::size_t j = 0; j < f.lo.size(); ++j) {
            const double v = x[((2 * k + j) % n) * stride];
            sa += f.lo[j] * v;
            sd += f.hi[j] * v;
        }
        a[k * out_stride] = sa;
        d[k * out_stride] = sd;
    }
}

// Transpose of analyze_1d; x must be zeroed by the caller.
void synthesize_1d(const Filters& f, const double* a, const double* d, std::size_t half, std::size_t in_stride,
                   double* x, std::size_t stride) {
    const std::size_t n = half * 2;
    for (std::size_t k = 0; k < half; ++k) {
        const double va = a[k * in_stride];
        const double vd = d[k * in_stride];
        for (std::size_t j = 0; j < f.lo.size(); ++j) x[((2 * k + j) % n) * stride] += f.lo[j] * va + f.hi[j] * vd;
    }
}

struct Quad {
    std::vector<double> ll, lh, hl, hh;
};

// Single-level 2-D transform of one h x w plane (both even).
Quad analyze_2d(const Filters& f, std::span<const double> plane, std::size_t h, std::size_t w) {
    const std::size_t hw = w / 2;
    const std::size_t hh = h / 2;
    std::vector<double> row_lo(h * hw), row_hi(h * hw);
    for (std::size_t y = 0; y < h; ++y) {
        analyze_1d(f, &plane[y * w], w, 1, &row_lo[y * hw], &row_hi[y * hw], 1);
    }
    Quad q;
    q.ll.resize(hh * hw);
    q.lh.resize(hh * hw);
    q.hl.resize(hh * hw);
    q.hh.resize(hh * hw);
    for (std::size_t x = 0; x < hw; ++x) {
        analyze_1d(f, &row_lo[x], h, hw, &q.ll[x], &q.hl[x], hw);
        analyze_1d(f, &row_hi[x], h, hw, &q.lh[x], &q.hh[x], hw);
    }
    return q;
}

std::vector<double> synthesize_2d(const Filters& f, const Quad& q, std::size_t h, std::size_t w) {
    const std::size_t hw = w / 2;
    const std::size_t hh = h / 2;
    std::vector<double> row_lo(h * hw, 0.0), row_hi(h * hw, 0.0);
    for (std::size_t x = 0; x < hw; ++x) {
        synthesize_1d(f, &q.ll[x], &q.hl[x], hh, hw, &row_lo[x], hw);
        synthesize_1d(f, &q.lh[x], &q.hh[x], hh, hw, &row_hi[x], hw);
    }
    std::vector<double> plane(h * w, 0.0);
    for (std::size_t y = 0; y < h; ++y) {
        synthesize_1d(f, &row_lo[y * hw], &row_hi[y * hw], hw, 1, &plane[y * w], 1);
    }
    return plane;
}

SubBand make_subband(std::size_t channels, std::size_t h, std::size_t w) {
    return SubBand{channels, h, w, std::vector<double>(channels * h * w, 0.0)};
}

void put_plane(SubBand& band, std::size_t c, const std::vector<double>& plane) {
    std::copy(plane.begin(), plane.end(), band.values.begin() + static_cast<std::ptrdiff_t>(c * plane.size()));
}

std::span<const double> plane_of(const SubBand& band, std::size_t c) {
    const std::size_t n = band.height * band.width;
    return std::span<const double>(band.values).subspan(c * n, n);
}

void check_dims(const SubBand& band, std::size_t channels, std::size_t h, std::size_t w, const char* what) {
    if (band.channels != channels || band.height != h || band.width != w ||
        band.values.size() != channels * h * w) {
        fail(ErrorCode::shape_mismatch, std::string("wavelet pyramid ") + what + " sub-band has inconsistent shape");
    }
}

}  // namespace

WaveletPyramid dwt_decompose(const Latent& z, std::size_t levels, WaveletBasis basis) {
    if (levels < 1) fail(ErrorCode::invalid_argument, "wavelet levels must be >= 1");
    if (levels >= 8 * sizeof(std::size_t) || z.height() < (std::size_t{1} << levels) ||
        z.width() < (std::size_t{1} << levels)) {
        fail(ErrorCode::invalid_argument,
             "latent " + z.shape().str() + " too small for " + std::to_string(levels) + " wavelet levels");
    }
    const std::size_t block = std::size_t{1} << levels;
    WaveletPyramid p;
    p.basis = basis;
    p.levels = levels;
    p.original = z.shape();
    p.padded_height = (z.height() + block - 1) / block * block;
    p.padded_width = (z.width() + block - 1) / block * block;

    const Filters f = filters_for(basis);
    const std::size_t C = z.channels();
    std::size_t h = p.padded_height;
    std::size_t w = p.padded_width;

    SubBand current = make_subband(C, h, w);
    for (std::size_t c = 0; c < C; ++c) {
        for (std::size_t y = 0; y < h; ++y) {
            for (std::size_t x = 0; x < w; ++x) {
                current.values[(c * h + y) * w + x] = z.at(c, y % z.height(), x % z.width());
            }
        }
    }

    for (std::size_t level = 0; level < levels; ++level) {
        SubBand ll = make_subband(C, h / 2, w / 2);
        DetailLevel detail{make_subband(C, h / 2, w / 2), make_subband(C, h / 2, w / 2),
                           make_subband(C, h / 2, w / 2)};
        for (std::size_t c = 0; c < C; ++c) {
            Quad q = analyze_2d(f, plane_of(current, c), h, w);
            put_plane(ll, c, q.ll);
            put_plane(detail.lh, c, q.lh);
            put_plane(detail.hl, c, q.hl);
            put_plane(detail.hh, c, q.hh);
        }
        p.highs.push_back(std::move(detail));
        current = std::move(ll);
        h /= 2;
        w /= 2;
    }
    p.ll = std::move(current);
    return p;
}

Latent dwt_recompose(const WaveletPyramid& p) {
    const std::size_t C = p.original.channels;
    if (p.levels < 1 || p.highs.size() != p.levels) {
        fail(ErrorCode::shape_mismatch, "wavelet pyramid level count is inconsistent");
    }
    const std::size_t block = std::size_t{1} << p.levels;
    if (p.padded_height % block != 0 || p.padded_width % block != 0 || p.padded_height < p.original.height ||
        p.padded_width < p.original.width) {
        fail(ErrorCode::shape_mismatch, "wavelet pyramid padding is inconsistent");
    }
    check_dims(p.ll, C, p.padded_height / block, p.padded_width / block, "LL");

    const Filters f = filters_for(p.basis);
    SubBand current = p.ll;
    for (std::size_t level = p.levels; level-- > 0;) {
        const std::size_t h = current.height * 2;
        const std::size_t w = current.width * 2;
        const DetailLevel& d = p.highs[level];
        check_dims(d.lh, C, current.height, current.width, "LH");
        check_dims(d.hl, C, current.height, current.width, "HL");
        check_dims(d.hh, C, current.height, current.width, "HH");
        SubBand up = make_subband(C, h, w);
        for (std::size_t c = 0; c < C; ++c) {
            auto span_vec = [c](const SubBand& b) {
                auto s = plane_of(b, c);
                return std::vector<double>(s.begin(), s.end());
            };
            Quad q{span_vec(current), span_vec(d.lh), span_vec(d.hl), span_vec(d.hh)};
            put_plane(up, c, synthesize_2d(f, q, h, w));
        }
        current = std::move(up);
    }

    const Shape& s = p.original;
    std::vector<double> out(s.size());
    for (std::size_t c = 0; c < C; ++c) {
        for (std::size_t y = 0; y < s.height; ++y) {
            for (std::size_t x = 0; x < s.width; ++x) {
                out[(c * s.height + y) * s.width + x] = current.values[(c * current.height + y) * current.width + x];
            }
        }
    }
    return Latent::from_doubles(s, out);
}

Latent wavelet_colorful(const Latent& z, const Latent& c, std::size_t levels, double gamma, WaveletBasis basis) {
    require_same_shape(z, c, "wavelet_colorful");
    if (!std::isfinite(gamma)) fail(ErrorCode::invalid_argument, "gamma must be finite");
    WaveletPyramid pz = dwt_decompose(z, levels, basis);
    const WaveletPyramid pc = dwt_decompose(c, levels, basis);
    for (std::size_t i = 0; i < pz.ll.values.size(); ++i) pz.ll.values[i] = gamma * pc.ll.values[i];
    return dwt_recompose(pz);
}

}  // namespace cnoise
