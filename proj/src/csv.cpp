#include "evt/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "evt/errors.hpp"

namespace evt {

std::string to_string(SeriesKind kind) {
    return kind == SeriesKind::Prices ? "prices" : "returns";
}

SeriesKind parse_series_kind(const std::string& text) {
    if (text == "prices") return SeriesKind::Prices;
    if (text == "returns") return SeriesKind::Returns;
    throw std::invalid_argument("unknown series kind: '" + text + "' (expected prices or returns)");
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
}

double parse_value(const std::string& field, const std::filesystem::path& path, std::size_t line) {
    const std::string text = strip(field);
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw DataError(path.string() + ":" + std::to_string(line) + ": malformed numeric field '" +
                        field + "'");
    return value;
}

struct RawRow {
    Date date;
    double value;
};

std::vector<RawRow> load_rows(const std::filesystem::path& path, const CsvColumns& columns,
                              const std::string& default_value_column) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());

    std::string header;
    if (!std::getline(in, header)) throw DataError(path.string() + ": empty file");

    const std::string value_column = columns.value.empty() ? default_value_column : columns.value;
    const auto names = split_fields(strip(header));
    std::ptrdiff_t date_idx = -1, value_idx = -1;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const std::string name = strip(names[i]);
        if (name == columns.date) date_idx = static_cast<std::ptrdiff_t>(i);
        if (name == value_column) value_idx = static_cast<std::ptrdiff_t>(i);
    }
    if (date_idx < 0)
        throw DataError(path.string() + ": header lacks date column '" + columns.date + "'");
    if (value_idx < 0)
        throw DataError(path.string() + ": header lacks value column '" + value_column + "'");

    std::vector<RawRow> rows;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = strip(line);
        if (stripped.empty()) continue;
        const auto fields = split_fields(stripped);
        if (static_cast<std::ptrdiff_t>(fields.size()) <= std::max(date_idx, value_idx))
            throw DataError(path.string() + ":" + std::to_string(line_no) +
                            ": malformed row (too few fields)");
        RawRow row;
        try {
            row.date = parse_date(strip(fields[static_cast<std::size_t>(date_idx)]));
        } catch (const DataError& e) {
            throw DataError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        row.value = parse_value(fields[static_cast<std::size_t>(value_idx)], path, line_no);
        rows.push_back(row);
    }
    if (rows.empty()) throw DataError(path.string() + ": no data rows");
    return rows;
}

std::string label_or_stem(std::string label, const std::filesystem::path& path) {
    return label.empty() ? path.stem().string() : label;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    out << contents;
}

// Shortest round-trip representation, locale independent.
std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

PriceSeries load_price_csv(const std::filesystem::path& path, const CsvColumns& columns,
                           std::string label) {
    const auto rows = load_rows(path, columns, "price");
    std::vector<PricePoint> obs;
    obs.reserve(rows.size());
    for (const auto& r : rows) obs.push_back({r.date, r.value});
    try {
        return PriceSeries(std::move(obs), label_or_stem(std::move(label), path));
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

ReturnSeries load_return_csv(const std::filesystem::path& path, const CsvColumns& columns,
                             std::string label) {
    const auto rows = load_rows(path, columns, "return");
    std::vector<ReturnPoint> obs;
    obs.reserve(rows.size());
    for (const auto& r : rows) obs.push_back({r.date, r.value});
    try {
        return ReturnSeries(std::move(obs), label_or_stem(std::move(label), path));
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

void write_csv(const PriceSeries& series, const std::filesystem::path& path,
               const CsvColumns& columns) {
    std::string out = columns.date + "," + (columns.value.empty() ? "price" : columns.value) + "\n";
    for (const auto& o : series.observations())
        out += o.date.to_string() + "," + format_double(o.price) + "\n";
    write_file(path, out);
}

void write_csv(const ReturnSeries& series, const std::filesystem::path& path,
               const CsvColumns& columns) {
    std::string out = columns.date + "," + (columns.value.empty() ? "return" : columns.value) + "\n";
    for (const auto& o : series.observations())
        out += o.date.to_string() + "," + format_double(o.ret) + "\n";
    write_file(path, out);
}

}  // namespace evt
