#ifndef MOBILICAST_DIARY_RENDER_HPP
#define MOBILICAST_DIARY_RENDER_HPP

#include <string>
#include <vector>

#include "mobilicast/types.hpp"

namespace mobilicast
{

// Minute-of-day -> survey clock text. The survey writes 12-hour clocks with
// zero-padded hours and midnight as hour zero: 0 -> "00:00 AM",
// 450 -> "07:30 AM", 720 -> "12:00 PM", 1439 -> "11:59 PM".
// Throws InvalidRange outside 0..1439.
std::string format_minutes(int minute_of_day);

// Renders entries as the markdown diary table the survey instructions ask
// for: a header row, a dash separator, one row per visit. Pipe characters
// inside place names are replaced with '/' so the table stays parseable.
std::string render_diary_table(const std::vector<DiaryEntry>& entries);

} // namespace mobilicast

#endif // MOBILICAST_DIARY_RENDER_HPP
