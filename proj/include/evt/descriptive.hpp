#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evt/series.hpp"

namespace evt {

/// Moment summary of a return sample. Mean, std_dev, min, max are in percent;
/// kurtosis is raw (normal = 3).
struct SummaryStats {
    std::size_t n = 0;
    double mean = 0;
    double std_dev = 0;  // sample standard deviation, n-1 denominator
    double min = 0;
    double max = 0;
    double skewness = 0;  // m3 / m2^(3/2), n-denominator central moments
    double kurtosis = 0;  // m4 / m2^2
    double jarque_bera = 0;
    double jb_p_value = 0;  // chi-square with 2 dof
};

/// Jarque-Bera statistic from sample skewness and raw kurtosis:
/// JB = (n/6) * (S^2 + (K-3)^2 / 4).
double jarque_bera(std::size_t n, double skewness, double kurtosis);

/// Moment summary of a sample. Requires n >= 4; throws DataError on a
/// zero-variance (degenerate) sample rather than emitting NaNs.
SummaryStats summarize(std::span<const double> values);
SummaryStats summarize(const ReturnSeries& series);

/// The ceil(n * fraction) largest (upper) or smallest (lower) observations,
/// original dates retained, re-sorted by date. Requires 0 < fraction < 0.5
/// and a non-empty result.
ReturnSeries tail_subset(const ReturnSeries& series, Tail tail, double fraction = 0.10);

struct QqPoint {
    double theoretical;  // quantile of the normal fitted by sample mean/std
    double empirical;    // order statistic of the sample
};

/// Quantile-quantile data against the fitted normal distribution: point i
/// (1-based, sample ascending) pairs x_(i) with mean + std * Phi^-1((i-0.5)/n).
struct QqData {
    std::vector<QqPoint> points;
};

/// Requires n >= 2 and nonzero sample standard deviation.
QqData qq_normal(std::span<const double> values);
QqData qq_normal(const ReturnSeries& series);

}  // namespace evt
