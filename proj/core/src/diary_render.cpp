#include "mobilicast/diary_render.hpp"

#include <cstdio>
#include <sstream>

#include "mobilicast/errors.hpp"

namespace mobilicast
{

std::string format_minutes(int minute_of_day)
{
    if (minute_of_day < 0 || minute_of_day > 1439) {
        throw InvalidRange("minute of day " + std::to_string(minute_of_day) + " outside 0..1439");
    }
    const int h24 = minute_of_day / 60;
    const int mm = minute_of_day % 60;
    const bool pm = h24 >= 12;
    // Midnight stays hour 00 (survey convention); noon is 12 PM.
    int h12 = h24 % 12;
    if (pm && h12 == 0) {
        h12 = 12;
    }
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%02d:%02d %s", h12, mm, pm ? "PM" : "AM");
    return buf;
}

std::string render_diary_table(const std::vector<DiaryEntry>& entries)
{
    std::ostringstream out;
    out << "| Place Visited | Arrival Time | Departure Time | Location Type |\n";
    out << "|---------------|--------------|----------------|---------------|\n";
    for (const auto& e : entries) {
        std::string place = e.place_name;
        for (char& c : place) {
            if (c == '|') {
                c = '/';
            }
        }
        out << "| " << place << " | " << format_minutes(e.arrival_min) << " | "
            << format_minutes(e.departure_min) << " | " << e.code << " |\n";
    }
    return out.str();
}

} // namespace mobilicast
