#include "mobilicast/persona_gen.hpp"

#include "mobilicast/errors.hpp"

namespace mobilicast
{

SurveyAssignment make_assignment(Persona persona, const Date& survey_date)
{
    if (!is_valid_date(survey_date)) {
        throw InvalidRange("assignment date is not a valid calendar day");
    }
    SurveyAssignment a;
    a.persona = std::move(persona);
    a.survey_date = survey_date;
    a.weekday = weekday_name(survey_date);
    return a;
}

Persona sample_persona(const PriorSet& priors, Rng& rng)
{
    Persona p;
    p.region_id = priors.region_id;
    p.city_name = priors.city_name;
    p.state = priors.state;

    const auto draw = [&rng](const CategoricalPrior& prior) -> std::size_t {
        return rng.categorical(prior.probabilities());
    };

    p.sex = priors.at("sex").outcomes[draw(priors.at("sex"))].label;

    const std::size_t band_idx = draw(priors.at("age_group"));
    const AgeBand band = priors.age_bands[band_idx];
    p.age = static_cast<int>(rng.uniform_int(band.lo, band.hi));

    p.race = priors.at("race").outcomes[draw(priors.at("race"))].label;
    p.school_enrollment = parse_bool_label(priors.at("school_enrollment").outcomes[draw(priors.at("school_enrollment"))].label);
    p.in_labor_force = parse_bool_label(priors.at("labor_force").outcomes[draw(priors.at("labor_force"))].label);

    // Every marginal is drawn unconditionally (one draw per control variable,
    // always in the same order) and cross-field consistency is repaired after
    // the fact: outside the labor force nobody is employed, and only the
    // employed carry an occupation.
    p.employed = parse_bool_label(priors.at("employment").outcomes[draw(priors.at("employment"))].label);
    p.occupation = priors.at("occupation").outcomes[draw(priors.at("occupation"))].label;

    p.marital_status = priors.at("marital_status").outcomes[draw(priors.at("marital_status"))].label;
    p.household_type = priors.at("household_type").outcomes[draw(priors.at("household_type"))].label;
    p.children_under_18 = parse_bool_label(priors.at("children_under_18").outcomes[draw(priors.at("children_under_18"))].label);

    if (!p.in_labor_force) {
        p.employed = false;
    }
    if (!p.employed) {
        p.occupation.reset();
    }

    validate_persona(p);
    return p;
}

Date sample_date(const Date& start, const Date& end, Rng& rng)
{
    if (!is_valid_date(start) || !is_valid_date(end)) {
        throw InvalidRange("date window bound is not a valid calendar day");
    }
    const long span = days_between(start, end);
    if (span < 0) {
        throw InvalidRange("date window ends (" + format_date(end) + ") before it starts (" +
                           format_date(start) + ")");
    }
    return add_days(start, rng.uniform_int(0, span));
}

} // namespace mobilicast
