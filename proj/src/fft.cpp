#include "cnoise/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

#include "cnoise/error.hpp"

namespace cnoise {

namespace {

// FFTW's planner is not thread-safe; execution of an existing plan is. Plans
// are created once per (H, W, direction) with FFTW_ESTIMATE so the chosen
// algorithm, and therefore every output bit, is reproducible run to run.
class PlanCache {
public:
    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

    fftw_plan get(std::size_t height, std::size_t width, int sign) {
        std::lock_guard lock(mutex_);
        const auto key = std::make_tuple(height, width, sign);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;

        const std::size_t n = height * width;
        auto* in = fftw_alloc_complex(n);
        auto* out = fftw_alloc_complex(n);
        fftw_plan plan = fftw_plan_dft_2d(static_cast<int>(height), static_cast<int>(width), in, out, sign,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(in);
        fftw_free(out);
        if (plan == nullptr) fail(ErrorCode::invalid_argument, "FFTW could not plan the transform");
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<std::size_t, std::size_t, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

std::vector<Complex> run(std::span<const Complex> in, std::size_t height, std::size_t width, int sign) {
    if (in.size() != height * width) fail(ErrorCode::shape_mismatch, "plane size does not match dims");
    std::vector<Complex> src(in.begin(), in.end());
    std::vector<Complex> dst(in.size());
    fftw_execute_dft(plan_cache().get(height, width, sign), reinterpret_cast<fftw_complex*>(src.data()),
                     reinterpret_cast<fftw_complex*>(dst.data()));
    return dst;
}

}  // namespace

std::vector<Complex> fft2(std::span<const Complex> plane, std::size_t height, std::size_t width) {
    return run(plane, height, width, FFTW_FORWARD);
}

std::vector<Complex> fft2(std::span<const double> plane, std::size_t height, std::size_t width) {
    std::vector<Complex> c(plane.begin(), plane.end());
    return run(c, height, width, FFTW_FORWARD);
}

std::vector<Complex> ifft2(std::span<const Complex> spectrum, std::size_t height, std::size_t width) {
    auto out = run(spectrum, height, width, FFTW_BACKWARD);
    const double scale = 1.0 / double(height * width);
    for (auto& v : out) v *= scale;
    return out;
}

}  // namespace cnoise
