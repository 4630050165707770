#pragma once

namespace evt {

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile (inverse CDF), Wichura's AS 241 PPND16 algorithm,
/// accurate to ~1e-15 over (0, 1). Throws std::invalid_argument outside (0, 1).
double normal_quantile(double p);

/// Survival function of the chi-square distribution with two degrees of
/// freedom: P(X > x) = exp(-x/2).
double chi2_2_survival(double x);

/// Quantile of the chi-square distribution with one degree of freedom,
/// via the identity chi2_1 = Z^2. 3.8415 at p = 0.95.
double chi2_1_quantile(double p);

}  // namespace evt
