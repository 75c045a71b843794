#ifndef MOBILICAST_TYPES_HPP
#define MOBILICAST_TYPES_HPP

#include <optional>
#include <string>
#include <vector>

#include "mobilicast/date.hpp"

namespace mobilicast
{

// A fully sampled synthetic survey respondent. Every field is concrete; use
// PersonaMeta where fields may legitimately be unknown (e.g. diaries loaded
// from a corpus that never recorded demographics).
struct Persona {
    std::string sex; // outcome label, e.g. "female"
    int age = 0; // years, sampled within an age-group band
    std::string race;
    bool school_enrollment = false;
    bool in_labor_force = false;
    bool employed = false;
    std::optional<std::string> occupation; // present iff employed
    std::string marital_status;
    std::string household_type;
    bool children_under_18 = false;
    std::string city_name;
    std::string state;
    std::string region_id;

    bool operator==(const Persona&) const = default;
};

// Checks cross-field consistency; throws InvalidRange / InvalidConfig with
// the offending field in the message.
void validate_persona(const Persona& p);

// Demographic metadata as attached to stored diaries: everything optional.
struct PersonaMeta {
    std::optional<std::string> sex;
    std::optional<int> age;
    std::optional<std::string> race;
    std::optional<bool> school_enrollment;
    std::optional<bool> in_labor_force;
    std::optional<bool> employed;
    std::optional<std::string> occupation;
    std::optional<std::string> marital_status;
    std::optional<std::string> household_type;
    std::optional<bool> children_under_18;
    std::optional<std::string> city_name;
    std::optional<std::string> state;

    static PersonaMeta from_persona(const Persona& p);

    bool empty() const;

    bool operator==(const PersonaMeta&) const = default;
};

// One diary row: a visited place with arrival/departure clock minutes
// (0..1439, minute-of-day) and its survey location code.
struct DiaryEntry {
    std::string place_name;
    int arrival_min = 0;
    int departure_min = 0;
    int code = 1;

    bool operator==(const DiaryEntry&) const = default;
};

// One person-day of travel. Entries are ordered by time; consecutive entries
// may leave a gap (travel time between places).
struct TravelDiary {
    std::string persona_id;
    Date survey_date;
    std::vector<DiaryEntry> entries;
    std::optional<PersonaMeta> persona; // optional demographics

    bool operator==(const TravelDiary&) const = default;
};

// Returns an empty string when the diary satisfies the stored-diary
// invariants, else a description of the first violation:
//   - at least one entry
//   - 0 <= arrival <= departure <= 1439 for every entry
//   - entries sorted: next arrival >= previous departure
//   - every code is a valid survey code
std::string diary_violation(const TravelDiary& d);

enum class CorpusSource {
    Actual, // ground-truth survey data
    Generated, // synthesized diaries
};

std::string_view corpus_source_id(CorpusSource s); // "actual" / "generated"
CorpusSource parse_corpus_source(std::string_view text);

// A set of diaries for one region from one source.
struct Corpus {
    std::string region_id;
    CorpusSource source = CorpusSource::Generated;
    std::vector<TravelDiary> diaries;

    bool operator==(const Corpus&) const = default;
};

} // namespace mobilicast

#endif // MOBILICAST_TYPES_HPP
