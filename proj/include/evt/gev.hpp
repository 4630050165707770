#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "evt/blocks.hpp"

namespace evt {

/// |shape| below this routes to the Gumbel formulas, avoiding catastrophic
/// cancellation near shape = 0.
inline constexpr double kGumbelShapeEps = 1e-6;

/// Generalised extreme value parameters: shape (xi), scale (sigma, > 0),
/// location (mu). Shape > 0 is the fat-tailed Frechet branch, shape < 0
/// Weibull, shape = 0 Gumbel.
struct GevParams {
    double shape = 0;
    double scale = 1;
    double location = 0;

    bool operator==(const GevParams&) const = default;

    /// Lower edge of the support: location - scale/shape for shape > 0,
    /// -infinity otherwise.
    [[nodiscard]] double support_lower() const;
    /// Upper edge of the support: location - scale/shape for shape < 0,
    /// +infinity otherwise.
    [[nodiscard]] double support_upper() const;

    [[nodiscard]] bool valid() const;
};

/// GEV density. Zero outside the support; throws std::invalid_argument on
/// invalid parameters.
double gev_pdf(const GevParams& params, double x);

/// GEV distribution function, clamped to 0/1 off-support, monotone in x.
double gev_cdf(const GevParams& params, double x);

/// GEV quantile: location + scale * ((-ln p)^(-shape) - 1) / shape, with the
/// Gumbel limit location - scale * ln(-ln p). Requires 0 < p < 1.
double gev_quantile(const GevParams& params, double p);

/// Log-likelihood of maxima under the GEV. Returns -infinity when scale <= 0
/// or any observation violates 1 + shape*(x - location)/scale > 0.
double gev_loglik(const GevParams& params, std::span<const double> maxima);
double gev_loglik(const GevParams& params, const BlockMaxima& maxima);

/// n inverse-transform draws from a seeded deterministic generator (see Rng).
std::vector<double> gev_sample(const GevParams& params, std::size_t n, std::uint64_t seed);

}  // namespace evt
