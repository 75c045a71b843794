#include "mobilicast/types.hpp"

#include <string_view>

#include "mobilicast/errors.hpp"
#include "mobilicast/taxonomy.hpp"

namespace mobilicast
{

void validate_persona(const Persona& p)
{
    if (p.age < 16 || p.age > 120) {
        throw InvalidRange("persona age " + std::to_string(p.age) + " outside [16, 120]");
    }
    if (p.employed && !p.in_labor_force) {
        throw InvalidConfig("persona is employed but not in the labor force");
    }
    if (p.employed != p.occupation.has_value()) {
        throw InvalidConfig(p.employed ? "employed persona lacks an occupation"
                                       : "non-employed persona carries an occupation");
    }
    if (p.sex.empty()) {
        throw InvalidConfig("persona sex label is empty");
    }
}

PersonaMeta PersonaMeta::from_persona(const Persona& p)
{
    PersonaMeta m;
    m.sex = p.sex;
    m.age = p.age;
    m.race = p.race;
    m.school_enrollment = p.school_enrollment;
    m.in_labor_force = p.in_labor_force;
    m.employed = p.employed;
    m.occupation = p.occupation;
    m.marital_status = p.marital_status;
    m.household_type = p.household_type;
    m.children_under_18 = p.children_under_18;
    if (!p.city_name.empty()) {
        m.city_name = p.city_name;
    }
    if (!p.state.empty()) {
        m.state = p.state;
    }
    return m;
}

bool PersonaMeta::empty() const
{
    return !sex && !age && !race && !school_enrollment && !in_labor_force && !employed && !occupation &&
           !marital_status && !household_type && !children_under_18 && !city_name && !state;
}

std::string diary_violation(const TravelDiary& d)
{
    if (d.entries.empty()) {
        return "diary has no entries";
    }
    const auto& tax = LocationTaxonomy::builtin();
    int prev_departure = 0;
    for (std::size_t i = 0; i < d.entries.size(); ++i) {
        const DiaryEntry& e = d.entries[i];
        const std::string at = "entry " + std::to_string(i);
        if (e.arrival_min < 0 || e.arrival_min > 1439 || e.departure_min < 0 || e.departure_min > 1439) {
            return at + ": time outside 0..1439";
        }
        if (e.arrival_min > e.departure_min) {
            return at + ": arrival after departure";
        }
        if (i > 0 && e.arrival_min < prev_departure) {
            return at + ": arrival before previous departure";
        }
        if (!tax.valid_code(e.code)) {
            return at + ": unknown location code " + std::to_string(e.code);
        }
        prev_departure = e.departure_min;
    }
    return {};
}

std::string_view corpus_source_id(CorpusSource s)
{
    return s == CorpusSource::Actual ? "actual" : "generated";
}

CorpusSource parse_corpus_source(std::string_view text)
{
    if (text == "actual") {
        return CorpusSource::Actual;
    }
    if (text == "generated") {
        return CorpusSource::Generated;
    }
    throw ParseFailure("unknown corpus source '" + std::string(text) + "' (expected actual or generated)");
}

} // namespace mobilicast
