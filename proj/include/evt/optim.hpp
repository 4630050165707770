#pragma once

#include <functional>
#include <span>
#include <vector>

namespace evt {

/// Settings for the Nelder-Mead direct search.
struct NelderMeadOptions {
    double f_tol = 1e-11;   // stop when the simplex function spread falls below
    double x_tol = 1e-9;    // ... or the simplex diameter does
    int max_evals = 5000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0;
    int evaluations = 0;
    bool converged = false;
};

/// Minimize f by the Nelder-Mead simplex method (reflection 1, expansion 2,
/// contraction 0.5, shrink 0.5). Infeasible points signal +infinity; the
/// search never averages function values, so the sentinel simply loses every
/// comparison. The starting point must be feasible. `step` holds the initial
/// simplex offsets per coordinate; offsets are halved (up to 60 times) while
/// they land outside the feasible region.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0, std::span<const double> step,
                             const NelderMeadOptions& options = {});

}  // namespace evt
