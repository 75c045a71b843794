#ifndef MOBILICAST_DATE_HPP
#define MOBILICAST_DATE_HPP

#include <compare>
#include <string>
#include <string_view>

namespace mobilicast
{

// Calendar date. Thin value type over <chrono>'s civil calendar so the rest
// of the library can pass dates around without dragging chrono types through
// every signature.
struct Date {
    int year = 1970;
    unsigned month = 1; // 1..12
    unsigned day = 1; // 1..31

    auto operator<=>(const Date&) const = default;
};

// Parses strict "YYYY-MM-DD"; throws ParseFailure on malformed text or an
// impossible calendar date (e.g. 2017-02-29).
Date parse_date(std::string_view text);

// "YYYY-MM-DD", zero padded.
std::string format_date(const Date& d);

// English weekday name, "Monday".."Sunday".
std::string weekday_name(const Date& d);

// Signed day count `to - from`.
long days_between(const Date& from, const Date& to);

Date add_days(const Date& d, long n);

bool is_valid_date(const Date& d);

} // namespace mobilicast

#endif // MOBILICAST_DATE_HPP
