#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "evt/gev.hpp"
#include "evt/optim.hpp"

namespace evt {

/// A closed or half-open interval. An open flag marks an endpoint that could
/// not be bounded within the search budget; the stored value is then the
/// furthest point confirmed inside.
struct Interval {
    double low = 0;
    double high = 0;
    bool low_open = false;
    bool high_open = false;

    [[nodiscard]] bool contains(double x) const {
        return (low_open || x >= low) && (high_open || x <= high);
    }
};

/// Per-parameter profile-likelihood confidence intervals at one level.
struct ParamCis {
    Interval shape;
    Interval scale;
    Interval location;
    double level = 0.95;
};

struct FitConfig {
    int min_maxima = 10;          // refuse to fit fewer block maxima
    int restarts = 5;             // jittered restarts after the moment-based start
    std::uint64_t jitter_seed = 0x9e3779b97f4a7c15ull;
    NelderMeadOptions nm{};
    double gradient_tolerance = 1e-4;  // post-hoc first-order optimality check
    double shape_min = -5.0;
    double shape_max = 5.0;
    double scale_min = 1e-8;
};

/// Maximum-likelihood fit of the GEV to block maxima.
struct GevFit {
    GevParams params;
    double log_lik = 0;
    std::size_t n_maxima = 0;
    bool converged = false;
    int n_evaluations = 0;
    double gradient_norm = 0;  // finite-difference gradient at the optimum
    /// MLE regularity is questionable for shape <= -0.5; flagged, not forbidden.
    bool shape_regularity_warning = false;
    std::optional<Tail> tail;
    std::optional<BlockScheme> scheme;
    std::optional<ParamCis> param_cis;  // filled by the inference layer
};

/// Fit by derivative-free simplex search on the log-likelihood with jittered
/// restarts; initialization uses Gumbel moment estimates (sigma0 = s*sqrt(6)/pi,
/// mu0 = mean - gamma*sigma0, shape0 = 0.1). Throws std::invalid_argument when
/// fewer than config.min_maxima values are given and DataError when all values
/// are identical; non-convergence is reported through the converged flag.
GevFit fit_gev(std::span<const double> maxima, const FitConfig& config = {});
GevFit fit_gev(const BlockMaxima& maxima, const FitConfig& config = {});

}  // namespace evt
