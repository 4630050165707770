#pragma once

#include <span>
#include <utility>
#include <vector>

#include "evt/fit.hpp"

namespace evt {

/// k-block return level with its asymmetric profile-likelihood interval.
/// Exceeded in one block out of k on average.
struct RiskLevel {
    double k = 0;  // blocks of the fitted scheme, > 1
    double estimate = 0;
    Interval ci;
    std::optional<Tail> tail;
    std::optional<BlockScheme> scheme;
};

struct ProfilePoint {
    double value;    // the profiled quantity
    double loglik;   // likelihood maximized over the nuisance parameters
};

/// Profile log-likelihood trace; loglik <= max_log_lik (to optimizer
/// tolerance) everywhere, with equality at the MLE.
struct ProfileCurve {
    std::vector<ProfilePoint> grid;  // ascending in value
    double max_log_lik = 0;
};

enum class GevParam { Shape, Scale, Location };

[[nodiscard]] std::string to_string(GevParam which);

struct ProfileOptions {
    double level = 0.95;     // confidence level, chi-square(1) calibration
    double value_tol = 1e-4; // bisection precision on the profiled quantity
    int max_expansions = 60; // x1.5 bracket growth steps per side before giving up
    NelderMeadOptions nm{};  // nuisance-parameter optimizer settings
};

/// k-block return level x_k = H^-1(1 - 1/k) at the given parameters
/// (identical to gev_quantile(params, 1 - 1/k)). Requires k > 1.
double return_level(const GevParams& params, double k);

/// Profile-likelihood confidence interval for one GEV parameter: the set
/// { theta : 2*(l_max - l_prof(theta)) <= chi2_1 quantile at level }, endpoints
/// located by outward x1.5 bracketing from the MLE and bisection. Requires a
/// converged fit on these maxima. Throws ConvergenceError (naming the offending
/// theta) when a nuisance optimization fails.
std::pair<Interval, ProfileCurve> profile_ci_param(std::span<const double> maxima,
                                                   const GevFit& fit, GevParam which,
                                                   const ProfileOptions& options = {});
std::pair<Interval, ProfileCurve> profile_ci_param(const BlockMaxima& maxima, const GevFit& fit,
                                                   GevParam which,
                                                   const ProfileOptions& options = {});

/// Profile-likelihood interval for the k-block return level, obtained by
/// reparameterizing the likelihood with x_k in place of the location
/// (location = x_k + scale*(1 - y^-shape)/shape, y = -ln(1 - 1/k)) and
/// profiling over (shape, scale). The interval is asymmetric in general.
RiskLevel profile_ci_level(std::span<const double> maxima, const GevFit& fit, double k,
                           const ProfileOptions& options = {}, ProfileCurve* curve = nullptr);
RiskLevel profile_ci_level(const BlockMaxima& maxima, const GevFit& fit, double k,
                           const ProfileOptions& options = {}, ProfileCurve* curve = nullptr);

/// Convenience: fill fit.param_cis with the three parameter intervals.
ParamCis profile_param_cis(std::span<const double> maxima, const GevFit& fit,
                           const ProfileOptions& options = {});

}  // namespace evt
