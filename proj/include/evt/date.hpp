#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace evt {

/// A calendar day. Construction validates against the proleptic Gregorian calendar.
struct Date {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..days_in_month

    auto operator<=>(const Date&) const = default;

    /// Months elapsed since year 0; consecutive values for consecutive calendar months.
    [[nodiscard]] int month_index() const { return year * 12 + (month - 1); }
    [[nodiscard]] int quarter_index() const { return year * 4 + (month - 1) / 3; }
    [[nodiscard]] int semester_index() const { return year * 2 + (month - 1) / 6; }

    /// "YYYY-MM-DD"
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] bool valid() const;

    /// Day of week, 0 = Sunday .. 6 = Saturday.
    [[nodiscard]] int weekday() const;

    /// Next calendar day.
    [[nodiscard]] Date next() const;
};

/// Parse a strict ISO-8601 calendar date ("YYYY-MM-DD"). Throws DataError on
/// malformed input or an invalid calendar day.
Date parse_date(std::string_view text);

}  // namespace evt
