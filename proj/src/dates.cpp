#include "epss/dates.hpp"

#include <charconv>
#include <cstdio>

namespace epss {

std::optional<Date> parse_date(std::string_view text) {
    // Strict YYYY-MM-DD.
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    int y = 0;
    unsigned m = 0, d = 0;
    auto num = [](std::string_view s, auto& out) {
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc{} && p == s.data() + s.size();
    };
    if (!num(text.substr(0, 4), y) || !num(text.substr(5, 2), m) || !num(text.substr(8, 2), d))
        return std::nullopt;
    Date date = std::chrono::year{y} / std::chrono::month{m} / std::chrono::day{d};
    if (!date.ok()) return std::nullopt;
    return date;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(d.year()), unsigned(d.month()),
                  unsigned(d.day()));
    return buf;
}

Date add_months(const Date& d, int months) {
    Date r = d + std::chrono::months{months};
    if (!r.ok()) r = r.year() / r.month() / std::chrono::last;
    return r;
}

Date add_days(const Date& d, int days) {
    return Date{std::chrono::sys_days(d) + std::chrono::days{days}};
}

long days_between(const Date& from, const Date& to) {
    return (std::chrono::sys_days(to) - std::chrono::sys_days(from)).count();
}

} // namespace epss
