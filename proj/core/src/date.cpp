#include "mobilicast/date.hpp"

#include <array>
#include <cctype>
#include <chrono>
#include <cstdio>

#include "mobilicast/errors.hpp"

namespace mobilicast
{

namespace
{

std::chrono::year_month_day to_ymd(const Date& d)
{
    return std::chrono::year_month_day{std::chrono::year{d.year}, std::chrono::month{d.month},
                                       std::chrono::day{d.day}};
}

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Date parse_date(std::string_view text)
{
    // Strict YYYY-MM-DD: 4-2-2 digits, dash separated.
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        throw ParseFailure("bad date '" + std::string(text) + "': expected YYYY-MM-DD");
    }
    const std::string_view y = text.substr(0, 4);
    const std::string_view m = text.substr(5, 2);
    const std::string_view d = text.substr(8, 2);
    if (!all_digits(y) || !all_digits(m) || !all_digits(d)) {
        throw ParseFailure("bad date '" + std::string(text) + "': expected YYYY-MM-DD");
    }
    Date out;
    out.year = (y[0] - '0') * 1000 + (y[1] - '0') * 100 + (y[2] - '0') * 10 + (y[3] - '0');
    out.month = static_cast<unsigned>((m[0] - '0') * 10 + (m[1] - '0'));
    out.day = static_cast<unsigned>((d[0] - '0') * 10 + (d[1] - '0'));
    if (!is_valid_date(out)) {
        throw ParseFailure("bad date '" + std::string(text) + "': no such calendar day");
    }
    return out;
}

std::string format_date(const Date& d)
{
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", d.year, d.month, d.day);
    return buf;
}

std::string weekday_name(const Date& d)
{
    static const std::array<const char*, 7> names = {"Sunday",   "Monday", "Tuesday", "Wednesday",
                                                     "Thursday", "Friday", "Saturday"};
    const std::chrono::weekday wd{std::chrono::sys_days{to_ymd(d)}};
    return names[wd.c_encoding()];
}

long days_between(const Date& from, const Date& to)
{
    const auto a = std::chrono::sys_days{to_ymd(from)};
    const auto b = std::chrono::sys_days{to_ymd(to)};
    return (b - a).count();
}

Date add_days(const Date& d, long n)
{
    const auto day = std::chrono::sys_days{to_ymd(d)} + std::chrono::days{n};
    const std::chrono::year_month_day ymd{day};
    return Date{int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day())};
}

bool is_valid_date(const Date& d)
{
    return to_ymd(d).ok();
}

} // namespace mobilicast
