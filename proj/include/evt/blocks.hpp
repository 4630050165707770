#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evt/series.hpp"

namespace evt {

/// How a return series is partitioned into blocks. Calendar schemes key on the
/// observation dates (month = same year-month, quarter = Jan-Mar etc.,
/// semester = Jan-Jun / Jul-Dec); fixed-count blocks hold m consecutive
/// observations regardless of dates.
struct BlockScheme {
    enum class Kind { Month, Quarter, Semester, FixedCount };

    Kind kind = Kind::Month;
    int count = 0;  // observations per block, FixedCount only; >= 2

    static BlockScheme month() { return {Kind::Month, 0}; }
    static BlockScheme quarter() { return {Kind::Quarter, 0}; }
    static BlockScheme semester() { return {Kind::Semester, 0}; }
    static BlockScheme fixed_count(int m);

    bool operator==(const BlockScheme&) const = default;

    /// "month", "quarter", "semester" or "count:<m>".
    [[nodiscard]] std::string name() const;
};

/// Parse a scheme name as produced by BlockScheme::name().
BlockScheme parse_block_scheme(const std::string& text);

struct BlockMax {
    std::string block_id;
    double value;  // percent; for Tail::Lower this is the negated block minimum
};

/// Per-block extremes for one tail under one scheme. For the lower tail the
/// values are negated block minima, so downstream fitting always sees maxima.
struct BlockMaxima {
    std::vector<BlockMax> maxima;
    Tail tail = Tail::Upper;
    BlockScheme scheme;

    [[nodiscard]] std::vector<double> values() const;
    [[nodiscard]] std::size_t size() const { return maxima.size(); }
};

struct BlockOptions {
    /// Partially-filled edge blocks (the first/last calendar block, or the
    /// trailing fixed-count remainder) are dropped when they hold fewer
    /// observations than this.
    int min_edge_obs = 5;
};

/// Extract per-block maxima (upper tail) or negated minima (lower tail).
/// Throws DataError on an empty series, a fixed count exceeding the series
/// length, or when every block is dropped.
BlockMaxima extract_block_maxima(const ReturnSeries& series, BlockScheme scheme, Tail tail,
                                 const BlockOptions& options = {});

}  // namespace evt
