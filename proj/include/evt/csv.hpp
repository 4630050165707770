#pragma once

#include <filesystem>
#include <string>

#include "evt/series.hpp"

namespace evt {

enum class SeriesKind { Prices, Returns };

[[nodiscard]] std::string to_string(SeriesKind kind);
SeriesKind parse_series_kind(const std::string& text);

/// Column-name map for CSV ingestion. An empty value column defaults to
/// "price" or "return" depending on the series kind.
struct CsvColumns {
    std::string date = "date";
    std::string value;
};

/// Load a dated price series from a headered CSV file (comma delimiter,
/// ISO-8601 dates, '.' decimal point). Rows are sorted by date if needed.
/// Throws DataError with the offending line number on malformed rows,
/// and on duplicate dates, non-positive prices, or an empty file.
PriceSeries load_price_csv(const std::filesystem::path& path, const CsvColumns& columns = {},
                           std::string label = {});

/// Same contract as load_price_csv, for percent-return files.
ReturnSeries load_return_csv(const std::filesystem::path& path, const CsvColumns& columns = {},
                             std::string label = {});

void write_csv(const PriceSeries& series, const std::filesystem::path& path,
               const CsvColumns& columns = {});
void write_csv(const ReturnSeries& series, const std::filesystem::path& path,
               const CsvColumns& columns = {});

}  // namespace evt
