#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace oracle {

namespace {

std::vector<cplx> dft(const std::vector<cplx>& x, std::size_t h, std::size_t w, double sign) {
    std::vector<cplx> out(h * w);
    for (std::size_t u = 0; u < h; ++u) {
        for (std::size_t v = 0; v < w; ++v) {
            cplx acc = 0;
            for (std::size_t y = 0; y < h; ++y) {
                for (std::size_t x_ = 0; x_ < w; ++x_) {
                    // reduce the phase index mod n first to keep the angle small
                    const double ph = double((u * y) % h) / double(h) + double((v * x_) % w) / double(w);
                    acc += x[y * w + x_] * std::polar(1.0, sign * 2.0 * std::numbers::pi * ph);
                }
            }
            out[u * w + v] = acc;
        }
    }
    return out;
}

}  // namespace

std::vector<cplx> naive_dft2(const std::vector<cplx>& x, std::size_t h, std::size_t w) { return dft(x, h, w, -1.0); }

std::vector<cplx> naive_idft2(const std::vector<cplx>& x, std::size_t h, std::size_t w) {
    auto out = dft(x, h, w, 1.0);
    for (auto& c : out) c /= double(h * w);
    return out;
}

std::vector<int> enumerate_bands(Ratio alpha, Ratio beta, std::size_t h, std::size_t w) {
    // r^2 < (p/q)^2  <=>  2 q^2 (ku^2 W^2 + kv^2 H^2) < p^2 H^2 W^2
    const std::int64_t H = std::int64_t(h);
    const std::int64_t W = std::int64_t(w);
    std::vector<int> labels(h * w);
    for (std::size_t u = 0; u < h; ++u) {
        for (std::size_t v = 0; v < w; ++v) {
            // numpy fftfreq convention puts -n/2 at index n/2 for even n
            std::int64_t ku = std::int64_t(u);
            if (2 * ku >= H) ku -= H;
            std::int64_t kv = std::int64_t(v);
            if (2 * kv >= W) kv -= W;
            const std::int64_t lhs = 2 * (ku * ku * W * W + kv * kv * H * H);
            const std::int64_t hw2 = H * H * W * W;
            const bool low = lhs * alpha.den * alpha.den < alpha.num * alpha.num * hw2;
            const bool high = lhs * beta.den * beta.den > beta.num * beta.num * hw2;
            labels[u * w + v] = low ? 0 : (high ? 2 : 1);
        }
    }
    return labels;
}

double transport_lp(const std::vector<double>& a, const std::vector<double>& b, const std::vector<double>& pos) {
    const std::size_t n = a.size();
    if (b.size() != n || pos.size() != n) throw std::invalid_argument("transport_lp: size mismatch");
    const double inf = std::numeric_limits<double>::infinity();
    const double eps = 1e-15;

    // nodes: 0 = source, 1..n suppliers, n+1..2n consumers, 2n+1 = sink
    struct Edge {
        std::size_t to;
        double cap;
        double cost;
        std::size_t rev;
    };
    const std::size_t N = 2 * n + 2;
    const std::size_t S = 0;
    const std::size_t T = 2 * n + 1;
    std::vector<std::vector<Edge>> g(N);
    auto add = [&](std::size_t u, std::size_t v, double cap, double cost) {
        g[u].push_back({v, cap, cost, g[v].size()});
        g[v].push_back({u, 0.0, -cost, g[u].size() - 1});
    };
    for (std::size_t i = 0; i < n; ++i) add(S, 1 + i, a[i], 0.0);
    for (std::size_t j = 0; j < n; ++j) add(1 + n + j, T, b[j], 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) add(1 + i, 1 + n + j, inf, std::abs(pos[i] - pos[j]));

    double cost = 0.0;
    for (int iter = 0; iter < 10000; ++iter) {
        // Bellman-Ford on the residual network
        std::vector<double> dist(N, inf);
        std::vector<std::size_t> pv(N, N), pe(N, 0);
        dist[S] = 0.0;
        for (std::size_t round = 0; round < N; ++round) {
            bool changed = false;
            for (std::size_t u = 0; u < N; ++u) {
                if (dist[u] == inf) continue;
                for (std::size_t e = 0; e < g[u].size(); ++e) {
                    const Edge& ed = g[u][e];
                    if (ed.cap > eps && dist[u] + ed.cost < dist[ed.to] - 1e-12) {
                        dist[ed.to] = dist[u] + ed.cost;
                        pv[ed.to] = u;
                        pe[ed.to] = e;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        if (dist[T] == inf) break;
        double push = inf;
        for (std::size_t v = T; v != S; v = pv[v]) push = std::min(push, g[pv[v]][pe[v]].cap);
        for (std::size_t v = T; v != S; v = pv[v]) {
            Edge& ed = g[pv[v]][pe[v]];
            ed.cap -= push;
            g[v][ed.rev].cap += push;
        }
        cost += push * dist[T];
    }
    return cost;
}

double silhouette_direct(const std::vector<std::vector<double>>& d, const std::vector<std::string>& labels) {
    const std::size_t n = labels.size();
    std::map<std::string, std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < n; ++i) clusters[labels[i]].push_back(i);

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& own = clusters[labels[i]];
        if (own.size() == 1) continue;
        double a = 0.0;
        for (std::size_t j : own)
            if (j != i) a += d[i][j];
        a /= double(own.size() - 1);
        double b = std::numeric_limits<double>::infinity();
        for (const auto& [name, members] : clusters) {
            if (name == labels[i]) continue;
            double m = 0.0;
            for (std::size_t j : members) m += d[i][j];
            b = std::min(b, m / double(members.size()));
        }
        const double den = std::max(a, b);
        total += den == 0.0 ? 0.0 : (b - a) / den;
    }
    return total / double(n);
}

std::vector<double> area_average(const std::vector<double>& src, std::size_t h, std::size_t w, std::size_t th,
                                 std::size_t tw) {
    // fine grid of (h*th) x (w*tw): fine row r lies in source row r/th and target row r/h
    std::vector<double> sum(th * tw, 0.0);
    for (std::size_t r = 0; r < h * th; ++r) {
        for (std::size_t c = 0; c < w * tw; ++c) sum[(r / h) * tw + c / w] += src[(r / th) * w + c / tw];
    }
    for (auto& s : sum) s /= double(h * w);
    return sum;
}

std::vector<double> whiteness_rows(const std::vector<double>& plane, std::size_t h, std::size_t w, std::size_t k) {
    std::vector<cplx> x(plane.begin(), plane.end());
    const auto spec = naive_dft2(x, h, w);
    std::vector<double> power(k, 0.0);
    std::vector<double> count(k, 0.0);
    for (std::size_t u = 0; u < h; ++u) {
        for (std::size_t v = 0; v < w; ++v) {
            double fu = double(u) / double(h);
            if (fu >= 0.5) fu -= 1.0;
            double fv = double(v) / double(w);
            if (fv >= 0.5) fv -= 1.0;
            const double r = std::hypot(fu, fv) / std::hypot(0.5, 0.5);
            const std::size_t bin = std::min(k - 1, std::size_t(r * double(k)));
            power[bin] += std::norm(spec[u * w + v]);
            count[bin] += 1.0;
        }
    }
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        power[i] /= count[i];
        total += power[i];
    }
    for (auto& p : power) p /= total;
    return power;
}

}  // namespace oracle
