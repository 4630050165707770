#include "evt/date.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "evt/errors.hpp"

namespace evt {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return kDays[m - 1];
}

// Days since 1970-01-01 (proleptic Gregorian); Howard Hinnant's algorithm.
long days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const long era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<long>(doe) - 719468;
}

}  // namespace

bool Date::valid() const {
    return year >= 1 && year <= 9999 && month >= 1 && month <= 12 && day >= 1 &&
           day <= days_in_month(year, month);
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

int Date::weekday() const {
    const long days = days_from_civil(year, month, day);
    return static_cast<int>(((days % 7) + 11) % 7);  // 1970-01-01 was a Thursday (4)
}

Date Date::next() const {
    Date d = *this;
    if (++d.day > days_in_month(d.year, d.month)) {
        d.day = 1;
        if (++d.month > 12) {
            d.month = 1;
            ++d.year;
        }
    }
    return d;
}

Date parse_date(std::string_view text) {
    auto fail = [&] { throw DataError("invalid ISO-8601 date: '" + std::string(text) + "'"); };
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') fail();
    Date d;
    auto parse_int = [&](std::string_view part, int& out) {
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
        if (ec != std::errc{} || ptr != part.data() + part.size()) fail();
    };
    parse_int(text.substr(0, 4), d.year);
    parse_int(text.substr(5, 2), d.month);
    parse_int(text.substr(8, 2), d.day);
    if (!d.valid()) fail();
    return d;
}

}  // namespace evt
