#ifndef MOBILICAST_TIME_PARSE_HPP
#define MOBILICAST_TIME_PARSE_HPP

#include <optional>
#include <string_view>

namespace mobilicast
{

// Parses survey clock text to minute-of-day (0..1439). Accepted forms,
// leading/trailing whitespace ignored, AM/PM case-insensitive:
//   "7:30 AM" / "07:30 AM"   12-hour
//   "00:15 AM"               hour zero, the survey's midnight convention
//   "12:05 AM" -> 5          midnight as 12 AM
//   "12:40 PM" -> 760        noon
//   "17:20"                  24-hour when no suffix is given
// Returns nullopt for anything else (minutes > 59, 12-hour hours > 12,
// 24-hour hours > 23, missing colon, trailing junk).
std::optional<int> try_parse_time(std::string_view text);

// Throwing variant: ParseFailure on unparseable text.
int parse_time(std::string_view text);

} // namespace mobilicast

#endif // MOBILICAST_TIME_PARSE_HPP
