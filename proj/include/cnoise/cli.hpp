#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cnoise/latent.hpp"

namespace cnoise::cli {

enum ExitCode : int { ok = 0, usage_error = 2, data_error = 3, io_error = 4 };

struct SweepRow {
    double alpha = 0.0;
    double gamma = 0.0;
    std::optional<double> whiteness;
    std::string error;  // set when the cell failed
};

/// Whiteness of colorful_noise(z, c) over the alpha x gamma grid, alpha-major.
/// Per-cell library errors are recorded in the row, not thrown. Throws a
/// usage error if either grid is empty.
std::vector<SweepRow> sweep(std::span<const double> alphas, std::span<const double> gammas, const Latent& z,
                            const Latent& c, std::size_t bins);

/// CSV with header `alpha,gamma,whiteness,error`.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns 0 on success, 2 for usage errors, 3 for data errors
/// and 4 for I/O errors; failures are reported on `err` as one JSON line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cnoise::cli
