#ifndef MOBILICAST_PRIORS_HPP
#define MOBILICAST_PRIORS_HPP

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mobilicast
{

// The demographic control variables a prior file must provide, in the order
// they are consumed during persona sampling.
inline constexpr std::array<std::string_view, 10> kControlVariables = {
    "sex",           "age_group",      "race",           "school_enrollment", "labor_force",
    "employment",    "occupation",     "marital_status", "household_type",    "children_under_18",
};

struct PriorOutcome {
    std::string label;
    double p = 0.0;

    bool operator==(const PriorOutcome&) const = default;
};

struct CategoricalPrior {
    std::string variable;
    std::vector<PriorOutcome> outcomes;

    std::vector<double> probabilities() const;

    bool operator==(const CategoricalPrior&) const = default;
};

// Inclusive age band parsed from an age_group label ("25-54", "65+").
struct AgeBand {
    int lo = 0;
    int hi = 0;

    bool operator==(const AgeBand&) const = default;
};

// Marginal distributions for one survey region, as estimated from census
// tables. One categorical prior per control variable.
struct PriorSet {
    std::string region_id;
    std::string city_name; // optional, feeds the prompt's residence sentence
    std::string state; // optional
    int age_min = 0;
    int age_max = 0;
    std::map<std::string, CategoricalPrior> priors;
    std::vector<AgeBand> age_bands; // aligned with priors["age_group"].outcomes

    // Throws MissingVariable when the variable is absent.
    const CategoricalPrior& at(std::string_view variable) const;

    bool operator==(const PriorSet&) const = default;
};

// Parses "yes"/"no"/"true"/"false" (case-insensitive) outcome labels.
// Throws InvalidDistribution on anything else.
bool parse_bool_label(std::string_view label);

// Parses and validates a prior file. IoFailure when unreadable, ParseFailure
// for malformed JSON/fields, MissingVariable / InvalidDistribution /
// InvalidRange for semantic problems.
PriorSet load_priors(const std::filesystem::path& path);

// Same, from in-memory JSON text; `origin` names the source in error messages.
PriorSet parse_priors_json(const std::string& text, const std::string& origin = "<priors>");

// Every check load_priors applies after decoding:
//   - all control variables present
//   - every distribution non-empty, labels unique/non-empty, p >= 0,
//     probabilities summing to 1 within 1e-6
//   - 0 < age_min <= age_max, age bands parseable and inside the range
//   - boolean variables carry only yes/no/true/false labels
// Distributions inside the sum tolerance are renormalized to exactly 1, so a
// validated set never carries a probability outside [0, 1]. Also (re)derives
// p.age_bands from the age_group labels.
void validate_priors(PriorSet& p);

} // namespace mobilicast

#endif // MOBILICAST_PRIORS_HPP
