#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evt/date.hpp"

namespace evt {

/// Which tail of the return distribution an analysis targets.
enum class Tail { Upper, Lower };

[[nodiscard]] std::string to_string(Tail tail);
Tail parse_tail(const std::string& text);

struct PricePoint {
    Date date;
    double price;  // strictly positive, currency-agnostic
};

struct ReturnPoint {
    Date date;
    double ret;  // percent units: a 1% move is 1.0
};

/// Dated price observations, strictly increasing in date, all prices > 0, length >= 2.
class PriceSeries {
public:
    /// Sorts by date, then validates. Throws DataError on duplicate dates,
    /// non-positive or non-finite prices, or fewer than two observations.
    explicit PriceSeries(std::vector<PricePoint> observations, std::string label = {});

    [[nodiscard]] const std::vector<PricePoint>& observations() const { return obs_; }
    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] std::size_t size() const { return obs_.size(); }

private:
    std::vector<PricePoint> obs_;
    std::string label_;
};

/// Dated percent log returns, strictly increasing in date, all values finite.
class ReturnSeries {
public:
    /// Sorts by date, then validates. Throws DataError on duplicate dates,
    /// non-finite values, or an empty series.
    explicit ReturnSeries(std::vector<ReturnPoint> observations, std::string label = {});

    [[nodiscard]] const std::vector<ReturnPoint>& observations() const { return obs_; }
    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] std::size_t size() const { return obs_.size(); }

    /// Return values in date order.
    [[nodiscard]] std::vector<double> values() const;

    /// Elementwise negation (used to route lower-tail analysis through maxima code).
    [[nodiscard]] ReturnSeries negated() const;

private:
    std::vector<ReturnPoint> obs_;
    std::string label_;
};

/// Percent log returns: ret_t = 100 * ln(price_t / price_{t-1}), dated at t.
/// Output length is input length - 1.
ReturnSeries log_returns(const PriceSeries& prices);

}  // namespace evt
