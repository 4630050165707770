#include "evt/descriptive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "evt/errors.hpp"
#include "evt/normal.hpp"

namespace evt {

double jarque_bera(std::size_t n, double skewness, double kurtosis) {
    const double excess = kurtosis - 3.0;
    return static_cast<double>(n) / 6.0 * (skewness * skewness + excess * excess / 4.0);
}

SummaryStats summarize(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 4) throw std::invalid_argument("summarize: need at least 4 observations");

    SummaryStats s;
    s.n = n;
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());

    double m2 = 0, m3 = 0, m4 = 0;
    for (double x : values) {
        const double d = x - s.mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    const double nn = static_cast<double>(n);
    s.std_dev = std::sqrt(m2 / (nn - 1.0));
    m2 /= nn;
    m3 /= nn;
    m4 /= nn;
    if (m2 <= 0.0) throw DataError("summarize: zero-variance (degenerate) sample");

    s.skewness = m3 / std::pow(m2, 1.5);
    s.kurtosis = m4 / (m2 * m2);
    s.jarque_bera = jarque_bera(n, s.skewness, s.kurtosis);
    s.jb_p_value = chi2_2_survival(s.jarque_bera);
    return s;
}

SummaryStats summarize(const ReturnSeries& series) {
    const auto v = series.values();
    return summarize(std::span<const double>(v));
}

ReturnSeries tail_subset(const ReturnSeries& series, Tail tail, double fraction) {
    if (!(fraction > 0.0 && fraction < 0.5))
        throw std::invalid_argument("tail_subset: fraction must be in (0, 0.5)");
    const auto& obs = series.observations();
    const auto take = static_cast<std::size_t>(
        std::ceil(fraction * static_cast<double>(obs.size())));
    if (take == 0) throw DataError("tail_subset: empty result");

    std::vector<ReturnPoint> sorted = obs;
    std::sort(sorted.begin(), sorted.end(), [&](const ReturnPoint& a, const ReturnPoint& b) {
        if (a.ret != b.ret) return tail == Tail::Upper ? a.ret > b.ret : a.ret < b.ret;
        return a.date < b.date;  // deterministic tie-break
    });
    sorted.resize(take);
    return ReturnSeries(std::move(sorted), series.label());
}

QqData qq_normal(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) throw std::invalid_argument("qq_normal: need at least 2 observations");

    double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    double ss = 0;
    for (double x : values) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / (static_cast<double>(n) - 1.0));
    if (sd <= 0.0) throw DataError("qq_normal: zero standard deviation");

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    QqData qq;
    qq.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Hazen plotting positions (i - 0.5)/n
        const double p = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        qq.points.push_back({mean + sd * normal_quantile(p), sorted[i]});
    }
    return qq;
}

QqData qq_normal(const ReturnSeries& series) {
    const auto v = series.values();
    return qq_normal(std::span<const double>(v));
}

}  // namespace evt
