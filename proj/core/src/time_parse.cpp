#include "mobilicast/time_parse.hpp"

#include <cctype>
#include <string>

#include "mobilicast/errors.hpp"

namespace mobilicast
{

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

std::optional<int> try_parse_time(std::string_view text)
{
    std::string_view s = trim(text);
    if (s.empty()) {
        return std::nullopt;
    }

    std::size_t i = 0;
    const auto read_digits = [&](std::size_t min_len, std::size_t max_len) -> std::optional<int> {
        std::size_t start = i;
        int v = 0;
        while (i < s.size() && i - start < max_len && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        if (i - start < min_len) {
            return std::nullopt;
        }
        return v;
    };

    const auto hour = read_digits(1, 2);
    if (!hour || i >= s.size() || s[i] != ':') {
        return std::nullopt;
    }
    ++i;
    const auto minute = read_digits(2, 2);
    if (!minute || *minute > 59) {
        return std::nullopt;
    }

    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
    }

    if (i == s.size()) {
        // No suffix: 24-hour clock.
        if (*hour > 23) {
            return std::nullopt;
        }
        return *hour * 60 + *minute;
    }

    // Expect AM/PM, case-insensitive, then end of text.
    if (s.size() - i != 2) {
        return std::nullopt;
    }
    const char a = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    const char b = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i + 1])));
    if (b != 'M' || (a != 'A' && a != 'P')) {
        return std::nullopt;
    }
    if (*hour > 12) {
        return std::nullopt;
    }
    // Hour 0 and hour 12 are the same position on a 12-hour dial; the survey
    // writes midnight as "00:xx AM" but "12:xx AM" means it too.
    const int h = *hour % 12;
    return (a == 'P' ? h + 12 : h) * 60 + *minute;
}

int parse_time(std::string_view text)
{
    const auto v = try_parse_time(text);
    if (!v) {
        throw ParseFailure("unparseable clock time '" + std::string(text) + "'");
    }
    return *v;
}

} // namespace mobilicast
