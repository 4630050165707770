#include "evt/series.hpp"

#include <algorithm>
#include <cmath>

#include "evt/errors.hpp"

namespace evt {

std::string to_string(Tail tail) { return tail == Tail::Upper ? "upper" : "lower"; }

Tail parse_tail(const std::string& text) {
    if (text == "upper") return Tail::Upper;
    if (text == "lower") return Tail::Lower;
    throw std::invalid_argument("unknown tail: '" + text + "' (expected upper or lower)");
}

PriceSeries::PriceSeries(std::vector<PricePoint> observations, std::string label)
    : obs_(std::move(observations)), label_(std::move(label)) {
    if (obs_.size() < 2) throw DataError("price series needs at least 2 observations");
    std::stable_sort(obs_.begin(), obs_.end(),
                     [](const PricePoint& a, const PricePoint& b) { return a.date < b.date; });
    for (std::size_t i = 0; i < obs_.size(); ++i) {
        if (!(obs_[i].price > 0) || !std::isfinite(obs_[i].price))
            throw DataError("non-positive or non-finite price at " + obs_[i].date.to_string());
        if (i > 0 && obs_[i].date == obs_[i - 1].date)
            throw DataError("duplicate date " + obs_[i].date.to_string());
    }
}

ReturnSeries::ReturnSeries(std::vector<ReturnPoint> observations, std::string label)
    : obs_(std::move(observations)), label_(std::move(label)) {
    if (obs_.empty()) throw DataError("return series is empty");
    std::stable_sort(obs_.begin(), obs_.end(),
                     [](const ReturnPoint& a, const ReturnPoint& b) { return a.date < b.date; });
    for (std::size_t i = 0; i < obs_.size(); ++i) {
        if (!std::isfinite(obs_[i].ret))
            throw DataError("non-finite return at " + obs_[i].date.to_string());
        if (i > 0 && obs_[i].date == obs_[i - 1].date)
            throw DataError("duplicate date " + obs_[i].date.to_string());
    }
}

std::vector<double> ReturnSeries::values() const {
    std::vector<double> v;
    v.reserve(obs_.size());
    for (const auto& o : obs_) v.push_back(o.ret);
    return v;
}

ReturnSeries ReturnSeries::negated() const {
    std::vector<ReturnPoint> out = obs_;
    for (auto& o : out) o.ret = -o.ret;
    return ReturnSeries(std::move(out), label_);
}

ReturnSeries log_returns(const PriceSeries& prices) {
    const auto& obs = prices.observations();
    std::vector<ReturnPoint> out;
    out.reserve(obs.size() - 1);
    for (std::size_t i = 1; i < obs.size(); ++i)
        out.push_back({obs[i].date, 100.0 * std::log(obs[i].price / obs[i - 1].price)});
    return ReturnSeries(std::move(out), prices.label());
}

}  // namespace evt
