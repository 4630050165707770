#include "evt/blocks.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>

#include "evt/errors.hpp"

namespace evt {

BlockScheme BlockScheme::fixed_count(int m) {
    if (m < 2) throw std::invalid_argument("fixed-count block scheme needs m >= 2");
    return {Kind::FixedCount, m};
}

std::string BlockScheme::name() const {
    switch (kind) {
        case Kind::Month: return "month";
        case Kind::Quarter: return "quarter";
        case Kind::Semester: return "semester";
        case Kind::FixedCount: return "count:" + std::to_string(count);
    }
    return "?";
}

BlockScheme parse_block_scheme(const std::string& text) {
    if (text == "month") return BlockScheme::month();
    if (text == "quarter") return BlockScheme::quarter();
    if (text == "semester") return BlockScheme::semester();
    if (text.rfind("count:", 0) == 0) {
        int m = 0;
        const auto* first = text.data() + 6;
        const auto* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, m);
        if (ec != std::errc{} || ptr != last || m < 2)
            throw std::invalid_argument("bad fixed-count scheme: '" + text + "'");
        return BlockScheme::fixed_count(m);
    }
    throw std::invalid_argument("unknown block scheme: '" + text +
                                "' (expected month, quarter, semester or count:<m>)");
}

std::vector<double> BlockMaxima::values() const {
    std::vector<double> v;
    v.reserve(maxima.size());
    for (const auto& m : maxima) v.push_back(m.value);
    return v;
}

namespace {

long calendar_key(const Date& d, BlockScheme::Kind kind) {
    switch (kind) {
        case BlockScheme::Kind::Month: return d.month_index();
        case BlockScheme::Kind::Quarter: return d.quarter_index();
        case BlockScheme::Kind::Semester: return d.semester_index();
        default: return 0;
    }
}

std::string calendar_label(long key, BlockScheme::Kind kind) {
    char buf[16];
    switch (kind) {
        case BlockScheme::Kind::Month:
            std::snprintf(buf, sizeof(buf), "%04ld-%02ld", key / 12, key % 12 + 1);
            break;
        case BlockScheme::Kind::Quarter:
            std::snprintf(buf, sizeof(buf), "%04ld-Q%ld", key / 4, key % 4 + 1);
            break;
        case BlockScheme::Kind::Semester:
            std::snprintf(buf, sizeof(buf), "%04ld-S%ld", key / 2, key % 2 + 1);
            break;
        default:
            buf[0] = '\0';
    }
    return buf;
}

}  // namespace

BlockMaxima extract_block_maxima(const ReturnSeries& series, BlockScheme scheme, Tail tail,
                                 const BlockOptions& options) {
    const auto& obs = series.observations();
    const double sign = tail == Tail::Upper ? 1.0 : -1.0;

    BlockMaxima result;
    result.tail = tail;
    result.scheme = scheme;

    if (scheme.kind == BlockScheme::Kind::FixedCount) {
        const auto m = static_cast<std::size_t>(scheme.count);
        if (m > obs.size())
            throw DataError("fixed-count block size " + std::to_string(m) +
                            " exceeds series length " + std::to_string(obs.size()));
        for (std::size_t start = 0; start < obs.size(); start += m) {
            const std::size_t end = std::min(start + m, obs.size());
            const std::size_t len = end - start;
            const bool partial = len < m;
            if (partial && len < static_cast<std::size_t>(options.min_edge_obs)) continue;
            double best = sign * obs[start].ret;
            for (std::size_t i = start + 1; i < end; ++i)
                best = std::max(best, sign * obs[i].ret);
            char id[16];
            std::snprintf(id, sizeof(id), "%04zu", start / m + 1);
            result.maxima.push_back({id, best});
        }
    } else {
        // observations are date-sorted, so blocks appear in key order
        std::map<long, std::pair<double, std::size_t>> blocks;  // key -> (max, count)
        for (const auto& o : obs) {
            const long key = calendar_key(o.date, scheme.kind);
            auto [it, inserted] = blocks.try_emplace(key, sign * o.ret, 1);
            if (!inserted) {
                it->second.first = std::max(it->second.first, sign * o.ret);
                ++it->second.second;
            }
        }
        const long first_key = blocks.begin()->first;
        const long last_key = blocks.rbegin()->first;
        for (const auto& [key, agg] : blocks) {
            const bool edge = key == first_key || key == last_key;
            if (edge && agg.second < static_cast<std::size_t>(options.min_edge_obs)) continue;
            result.maxima.push_back({calendar_label(key, scheme.kind), agg.first});
        }
    }

    if (result.maxima.empty()) throw DataError("no blocks left after edge filtering");
    return result;
}

}  // namespace evt
