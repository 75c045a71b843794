#ifndef MOBILICAST_PROMPT_HPP
#define MOBILICAST_PROMPT_HPP

#include <string>

#include "mobilicast/persona_gen.hpp"
#include "mobilicast/types.hpp"

namespace mobilicast
{

// English pronoun/verb forms keyed off the persona's sex label:
// "female" -> she/her, "male" -> he/his, anything else or unknown ->
// singular they (with matching verb forms: are/have/were/live).
struct PronounSet {
    std::string subj; // she / he / they
    std::string subj_cap; // She / He / They
    std::string poss; // her / his / their
    std::string is_form; // is / are
    std::string has_form; // has / have
    std::string was_form; // was / were
    std::string lives_form; // lives / live
};

PronounSet pronouns_for(const PersonaMeta& meta);

// The built-in prompt template. Placeholders: {PERSONA}, {SUBJ}, {SUBJ_CAP},
// {POSS}, {IS}, {HAS}, {WAS}, {LIVES}, {DATE}, {WEEKDAY}, {CODE_LIST}.
const std::string& default_prompt_template();

// The 20-line numbered location-code list embedded in prompts.
std::string location_code_list();

// Third-person persona description sentence(s); clauses for absent metadata
// fields drop out. With every field present this follows the fixed wording
// "The individual is a 59-year-old female whose racial background is ...".
std::string persona_paragraph(const PersonaMeta& meta);

// Instantiates `template_text` for one survey assignment.
std::string render_prompt(const PersonaMeta& meta, const Date& survey_date,
                          const std::string& template_text);

std::string render_prompt(const SurveyAssignment& assignment);
std::string render_prompt(const SurveyAssignment& assignment, const std::string& template_text);

} // namespace mobilicast

#endif // MOBILICAST_PROMPT_HPP
