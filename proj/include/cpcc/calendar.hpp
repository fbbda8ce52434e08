#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace cpcc {

using Date = std::chrono::sys_days;

/// Parses a strict "YYYY-MM-DD" calendar date. Invalid dates yield nullopt.
std::optional<Date> parse_date(std::string_view text);
std::string format_date(Date d);

/// ISO-8601 week (Monday start). Ordering follows calendar order.
struct IsoWeek {
    int year = 0;
    int week = 0;

    auto operator<=>(const IsoWeek&) const = default;
};

IsoWeek iso_week_of(Date d);
/// Monday of the given ISO week.
Date monday_of(IsoWeek w);
/// Number of ISO weeks (52 or 53) in an ISO year.
int iso_weeks_in_year(int iso_year);
IsoWeek next_week(IsoWeek w);
/// Signed number of weeks from a to b.
int weeks_between(IsoWeek a, IsoWeek b);

/// "2021-W07"
std::string format_iso_week(IsoWeek w);
std::optional<IsoWeek> parse_iso_week(std::string_view text);

} // namespace cpcc
