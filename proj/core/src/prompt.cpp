#include "mobilicast/prompt.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "mobilicast/taxonomy.hpp"

namespace mobilicast
{

namespace
{

// "a" / "an" for the token that follows (approximate: vowel-initial words,
// and numbers whose spoken form starts with a vowel: 8x, 11, 18).
std::string article_for_word(const std::string& word)
{
    if (word.empty()) {
        return "a";
    }
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(word[0])));
    return (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') ? "an" : "a";
}

std::string article_for_age(int age)
{
    if (age == 8 || age == 11 || age == 18 || (age >= 80 && age <= 89)) {
        return "an";
    }
    return "a";
}

void replace_all(std::string& text, const std::string& token, const std::string& value)
{
    std::size_t pos = 0;
    while ((pos = text.find(token, pos)) != std::string::npos) {
        text.replace(pos, token.size(), value);
        pos += value.size();
    }
}

} // namespace

PronounSet pronouns_for(const PersonaMeta& meta)
{
    const std::string sex = meta.sex.value_or("");
    if (sex == "female") {
        return {"she", "She", "her", "is", "has", "was", "lives"};
    }
    if (sex == "male") {
        return {"he", "He", "his", "is", "has", "was", "lives"};
    }
    return {"they", "They", "their", "are", "have", "were", "live"};
}

const std::string& default_prompt_template()
{
    static const std::string tpl =
        "{PERSONA} {SUBJ_CAP} {HAS} been selected for a travel survey and {HAS} recorded {POSS} "
        "travel logs for {DATE} which is a {WEEKDAY}.\n"
        "{SUBJ_CAP} {WAS} asked to provide a list of all the places {SUBJ} visited on {POSS} travel "
        "date, including the exact times of arrival and departure, and the location type. The table "
        "format provided was as follows:\n"
        "\n"
        "| Place Visited           | Arrival Time    | Departure Time  | Location Type   |\n"
        "|---------------|--------------|----------------|---------------|\n"
        "| [Place Name]            | [HH:MM AM/PM]   | [HH:MM AM/PM]   | [Location Type] |\n"
        "| [Place Name]            | [HH:MM AM/PM]   | [HH:MM AM/PM]   | [Location Type] |\n"
        "| ...                     | ...             | ...             | ... |\n"
        "\n"
        "{SUBJ_CAP} {WAS} instructed to fill in each row with the relevant information for each place "
        "{SUBJ} visited on the specified date. If {SUBJ} visited the same place multiple times on the "
        "same date, {SUBJ} {WAS} advised to add a separate row for each visit to that place.\n"
        "\n"
        "{SUBJ_CAP} {WAS} reminded of the following:\n"
        "\n"
        "1. Ensure that 'Home' is included in the list if it was part of travel activities on the "
        "specified date.\n"
        "2. {SUBJ_CAP} {WAS} asked to input the exact arrival and departure time as {SUBJ} noted in "
        "{POSS} travel diary.\n"
        "3. {SUBJ_CAP} {WAS} advised to carefully enter the times, as gaps between the departure time "
        "of the previous place and the arrival time of the current place indicate the time taken to "
        "arrive at the current location.\n"
        "\n"
        "For the 'Location Type,' {SUBJ} {WAS} instructed to use the corresponding code from the "
        "provided list:\n"
        "\n"
        "{CODE_LIST}\n"
        "\n"
        "The table {SUBJ} created is as follows:\n";
    return tpl;
}

std::string location_code_list()
{
    const auto& tax = LocationTaxonomy::builtin();
    std::ostringstream out;
    bool first = true;
    for (int code : tax.codes()) {
        if (!first) {
            out << '\n';
        }
        out << code << ": " << tax.code_label(code);
        first = false;
    }
    return out.str();
}

std::string persona_paragraph(const PersonaMeta& meta)
{
    const PronounSet pr = pronouns_for(meta);
    std::vector<std::string> sentences;

    // Age / sex / race.
    {
        std::string s = "The individual is ";
        if (meta.age && meta.sex) {
            s += article_for_age(*meta.age) + " " + std::to_string(*meta.age) + "-year-old " + *meta.sex;
        }
        else if (meta.age) {
            s += article_for_age(*meta.age) + " " + std::to_string(*meta.age) + "-year-old survey respondent";
        }
        else if (meta.sex) {
            s += article_for_word(*meta.sex) + " " + *meta.sex;
        }
        else {
            s += "a survey respondent";
        }
        if (meta.race) {
            s += " whose racial background is '" + *meta.race + "'";
        }
        s += ".";
        sentences.push_back(std::move(s));
    }

    // School enrollment / labor force.
    {
        const auto school_clause = [&](bool enrolled) {
            return std::string(enrolled ? "" : "not ") + "enrolled in school";
        };
        const auto labor_clause = [&](bool participating) {
            return std::string(participating ? "" : "not ") + "participating in the labor force";
        };
        if (meta.school_enrollment && meta.in_labor_force) {
            sentences.push_back("Currently, " + pr.subj + " " + pr.is_form + " " +
                                school_clause(*meta.school_enrollment) + " and " + pr.is_form + " " +
                                labor_clause(*meta.in_labor_force) + ".");
        }
        else if (meta.school_enrollment) {
            sentences.push_back("Currently, " + pr.subj + " " + pr.is_form + " " +
                                school_clause(*meta.school_enrollment) + ".");
        }
        else if (meta.in_labor_force) {
            sentences.push_back("Currently, " + pr.subj + " " + pr.is_form + " " +
                                labor_clause(*meta.in_labor_force) + ".");
        }
    }

    // Employment / occupation.
    if (meta.employed) {
        if (*meta.employed && meta.occupation) {
            sentences.push_back(pr.subj_cap + " " + pr.is_form + " employed and working in the '" +
                                *meta.occupation + "' field.");
        }
        else if (*meta.employed) {
            sentences.push_back(pr.subj_cap + " " + pr.is_form + " employed.");
        }
        else {
            sentences.push_back(pr.subj_cap + " " + pr.is_form + " not employed.");
        }
    }

    // Marital status / household type.
    if (meta.marital_status && meta.household_type) {
        sentences.push_back("Regarding " + pr.poss + " marital status, " + pr.subj + " " + pr.is_form +
                            " " + *meta.marital_status + ", and " + pr.lives_form + " in " +
                            article_for_word(*meta.household_type) + " " + *meta.household_type + ".");
    }
    else if (meta.marital_status) {
        sentences.push_back("Regarding " + pr.poss + " marital status, " + pr.subj + " " + pr.is_form +
                            " " + *meta.marital_status + ".");
    }
    else if (meta.household_type) {
        sentences.push_back(pr.subj_cap + " " + pr.lives_form + " in " +
                            article_for_word(*meta.household_type) + " " + *meta.household_type + ".");
    }

    // Children (mentioned only when present in the household).
    if (meta.children_under_18 && *meta.children_under_18) {
        sentences.push_back(pr.subj_cap + " " + pr.has_form + " children under the age of 18 living in " +
                            pr.poss + " household.");
    }

    // Residence.
    if (meta.city_name && meta.state) {
        sentences.push_back(pr.subj_cap + " " + pr.lives_form + " in " + *meta.city_name + ", " +
                            *meta.state + ".");
    }
    else if (meta.city_name) {
        sentences.push_back(pr.subj_cap + " " + pr.lives_form + " in " + *meta.city_name + ".");
    }

    std::string out;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        if (i > 0) {
            out += " ";
        }
        out += sentences[i];
    }
    return out;
}

std::string render_prompt(const PersonaMeta& meta, const Date& survey_date,
                          const std::string& template_text)
{
    const PronounSet pr = pronouns_for(meta);
    std::string out = template_text;
    replace_all(out, "{PERSONA}", persona_paragraph(meta));
    replace_all(out, "{SUBJ_CAP}", pr.subj_cap);
    replace_all(out, "{SUBJ}", pr.subj);
    replace_all(out, "{POSS}", pr.poss);
    replace_all(out, "{IS}", pr.is_form);
    replace_all(out, "{HAS}", pr.has_form);
    replace_all(out, "{WAS}", pr.was_form);
    replace_all(out, "{LIVES}", pr.lives_form);
    replace_all(out, "{DATE}", format_date(survey_date));
    replace_all(out, "{WEEKDAY}", weekday_name(survey_date));
    replace_all(out, "{CODE_LIST}", location_code_list());
    return out;
}

std::string render_prompt(const SurveyAssignment& assignment, const std::string& template_text)
{
    return render_prompt(PersonaMeta::from_persona(assignment.persona), assignment.survey_date,
                         template_text);
}

std::string render_prompt(const SurveyAssignment& assignment)
{
    return render_prompt(assignment, default_prompt_template());
}

} // namespace mobilicast
