#include "cpcc/calendar.hpp"

#include <charconv>
#include <cstdio>

namespace cpcc {

using namespace std::chrono;

namespace {

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

// Monday of ISO week 1: the week containing January 4th.
Date iso_year_start(int iso_year) {
    const Date jan4 = year_month_day{year{iso_year}, January, day{4}};
    const unsigned dow = weekday{jan4}.iso_encoding();  // 1 = Monday
    return jan4 - days{dow - 1};
}

} // namespace

std::optional<Date> parse_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    int y = 0, m = 0, d = 0;
    if (!parse_int(text.substr(0, 4), y) || !parse_int(text.substr(5, 2), m) ||
        !parse_int(text.substr(8, 2), d)) {
        return std::nullopt;
    }
    const year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) return std::nullopt;
    return Date{ymd};
}

std::string format_date(Date d) {
    const year_month_day ymd{d};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

IsoWeek iso_week_of(Date d) {
    // The ISO year is the calendar year of the Thursday in the same week.
    const unsigned dow = weekday{d}.iso_encoding();
    const Date thursday = d + days{4} - days{dow};
    const int iso_year = static_cast<int>(year_month_day{thursday}.year());
    const int week = static_cast<int>((thursday - iso_year_start(iso_year)).count() / 7) + 1;
    return {iso_year, week};
}

Date monday_of(IsoWeek w) {
    return iso_year_start(w.year) + days{7 * (w.week - 1)};
}

int iso_weeks_in_year(int iso_year) {
    return static_cast<int>((iso_year_start(iso_year + 1) - iso_year_start(iso_year)).count() / 7);
}

IsoWeek next_week(IsoWeek w) {
    return iso_week_of(monday_of(w) + days{7});
}

int weeks_between(IsoWeek a, IsoWeek b) {
    return static_cast<int>((monday_of(b) - monday_of(a)).count() / 7);
}

std::string format_iso_week(IsoWeek w) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-W%02d", w.year, w.week);
    return buf;
}

std::optional<IsoWeek> parse_iso_week(std::string_view text) {
    if (text.size() != 8 || text[4] != '-' || text[5] != 'W') return std::nullopt;
    int y = 0, w = 0;
    if (!parse_int(text.substr(0, 4), y) || !parse_int(text.substr(6, 2), w)) return std::nullopt;
    if (w < 1 || w > iso_weeks_in_year(y)) return std::nullopt;
    return IsoWeek{y, w};
}

} // namespace cpcc
