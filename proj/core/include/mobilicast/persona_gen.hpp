#ifndef MOBILICAST_PERSONA_GEN_HPP
#define MOBILICAST_PERSONA_GEN_HPP

#include "mobilicast/date.hpp"
#include "mobilicast/priors.hpp"
#include "mobilicast/rng.hpp"
#include "mobilicast/types.hpp"

namespace mobilicast
{

// A persona paired with the day they are asked to report on. The weekday is
// always derived from the date, never stored independently.
struct SurveyAssignment {
    Persona persona;
    Date survey_date;
    std::string weekday;

    bool operator==(const SurveyAssignment&) const = default;
};

SurveyAssignment make_assignment(Persona persona, const Date& survey_date);

// Draws one persona from the region's marginals. Every control variable is
// drawn unconditionally in the fixed kControlVariables order (plus one draw
// for age within the sampled band) so a given rng stream always yields the
// same persona; dependent fields are then repaired for consistency — only
// labor-force members stay employed, only the employed keep an occupation.
Persona sample_persona(const PriorSet& priors, Rng& rng);

// Uniform date in [start, end], both ends inclusive. Throws InvalidRange
// when end precedes start.
Date sample_date(const Date& start, const Date& end, Rng& rng);

} // namespace mobilicast

#endif // MOBILICAST_PERSONA_GEN_HPP
