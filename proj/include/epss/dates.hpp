#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace epss {

// Calendar date, ISO-8601 in all file formats.
using Date = std::chrono::year_month_day;

std::optional<Date> parse_date(std::string_view text);
std::string format_date(const Date& d);

// Adds calendar months, keeping the day-of-month and clamping to the end of
// the target month when it is shorter (2019-01-31 + 1 month = 2019-02-28).
Date add_months(const Date& d, int months);

Date add_days(const Date& d, int days);
long days_between(const Date& from, const Date& to);

} // namespace epss
