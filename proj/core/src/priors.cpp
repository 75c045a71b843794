#include "mobilicast/priors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "mobilicast/errors.hpp"

namespace mobilicast
{

namespace
{

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// "25-54" -> [25, 54]; "65+" -> [65, age_max].
AgeBand parse_age_band(const std::string& label, int age_max)
{
    const auto fail = [&]() -> AgeBand {
        throw InvalidDistribution("age_group label '" + label + "' is not 'LO-HI' or 'LO+'");
    };
    if (label.empty()) {
        return fail();
    }
    const auto to_int = [&](std::string_view digits) {
        if (digits.empty() || digits.size() > 3) {
            fail();
        }
        int v = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                fail();
            }
            v = v * 10 + (c - '0');
        }
        return v;
    };
    if (label.back() == '+') {
        const int lo = to_int(std::string_view(label).substr(0, label.size() - 1));
        return AgeBand{lo, age_max};
    }
    const auto dash = label.find('-');
    if (dash == std::string::npos) {
        return fail();
    }
    return AgeBand{to_int(std::string_view(label).substr(0, dash)),
                   to_int(std::string_view(label).substr(dash + 1))};
}

bool is_bool_variable(std::string_view variable)
{
    return variable == "school_enrollment" || variable == "labor_force" || variable == "employment" ||
           variable == "children_under_18";
}

} // namespace

std::vector<double> CategoricalPrior::probabilities() const
{
    std::vector<double> out;
    out.reserve(outcomes.size());
    for (const auto& o : outcomes) {
        out.push_back(o.p);
    }
    return out;
}

const CategoricalPrior& PriorSet::at(std::string_view variable) const
{
    const auto it = priors.find(std::string(variable));
    if (it == priors.end()) {
        throw MissingVariable("prior set for '" + region_id + "' lacks variable '" + std::string(variable) +
                              "'");
    }
    return it->second;
}

bool parse_bool_label(std::string_view label)
{
    const std::string l = lower(label);
    if (l == "yes" || l == "true") {
        return true;
    }
    if (l == "no" || l == "false") {
        return false;
    }
    throw InvalidDistribution("label '" + std::string(label) + "' is not a yes/no outcome");
}

PriorSet load_priors(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoFailure("cannot open prior file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_priors_json(buf.str(), path.string());
}

PriorSet parse_priors_json(const std::string& text, const std::string& origin)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::exception& e) {
        throw ParseFailure(origin + ": " + e.what());
    }

    PriorSet out;
    try {
        out.region_id = j.at("region_id").get<std::string>();
        out.city_name = j.value("city_name", std::string{});
        out.state = j.value("state", std::string{});
        const auto& range = j.at("age_range");
        if (!range.is_array() || range.size() != 2) {
            throw ParseFailure(origin + ": age_range must be [min, max]");
        }
        out.age_min = range[0].get<int>();
        out.age_max = range[1].get<int>();
        const auto& priors = j.at("priors");
        if (!priors.is_object()) {
            throw ParseFailure(origin + ": priors must be an object");
        }
        for (const auto& [variable, dist] : priors.items()) {
            CategoricalPrior prior;
            prior.variable = variable;
            if (!dist.is_array()) {
                throw ParseFailure(origin + ": prior '" + variable + "' must be an array");
            }
            for (const auto& entry : dist) {
                PriorOutcome o;
                o.label = entry.at("label").get<std::string>();
                o.p = entry.at("p").get<double>();
                prior.outcomes.push_back(std::move(o));
            }
            out.priors.emplace(variable, std::move(prior));
        }
    }
    catch (const nlohmann::json::exception& e) {
        throw ParseFailure(origin + ": " + e.what());
    }

    validate_priors(out);
    return out;
}

void validate_priors(PriorSet& p)
{
    if (p.region_id.empty()) {
        throw ParseFailure("prior set has empty region_id");
    }
    // Respondents are adult-ish survey subjects; 16 is the survey's floor.
    if (p.age_min < 16 || p.age_min > p.age_max) {
        throw InvalidRange("age_range [" + std::to_string(p.age_min) + ", " + std::to_string(p.age_max) +
                           "] must ascend from at least 16");
    }

    for (std::string_view variable : kControlVariables) {
        if (p.priors.find(std::string(variable)) == p.priors.end()) {
            throw MissingVariable("prior set for '" + p.region_id + "' lacks variable '" +
                                  std::string(variable) + "'");
        }
    }

    for (auto& [variable, prior] : p.priors) {
        if (prior.outcomes.empty()) {
            throw InvalidDistribution("prior '" + variable + "' has no outcomes");
        }
        double sum = 0.0;
        std::set<std::string> seen;
        for (const auto& o : prior.outcomes) {
            if (o.label.empty()) {
                throw InvalidDistribution("prior '" + variable + "' has an empty outcome label");
            }
            if (!seen.insert(o.label).second) {
                throw InvalidDistribution("prior '" + variable + "' repeats label '" + o.label + "'");
            }
            if (!(o.p >= 0.0) || !std::isfinite(o.p)) {
                throw InvalidDistribution("prior '" + variable + "' label '" + o.label +
                                          "' has negative or non-finite probability");
            }
            sum += o.p;
        }
        if (std::abs(sum - 1.0) > 1e-6) {
            throw InvalidDistribution("prior '" + variable + "' probabilities sum to " +
                                      std::to_string(sum) + ", expected 1");
        }
        // Hand-authored rounding within the tolerance is corrected here so
        // sampling always sees mass exactly 1 and every p stays in [0, 1].
        for (auto& o : prior.outcomes) {
            o.p /= sum;
        }
        if (is_bool_variable(variable)) {
            for (const auto& o : prior.outcomes) {
                parse_bool_label(o.label); // throws when not yes/no
            }
        }
    }

    // Age bands must parse and stay inside the declared range. The parsed
    // bands live next to the prior so sampling never re-parses labels.
    p.age_bands.clear();
    auto& bands = p.age_bands;
    for (const auto& o : p.at("age_group").outcomes) {
        const AgeBand band = parse_age_band(o.label, p.age_max);
        if (band.lo > band.hi || band.lo < p.age_min || band.hi > p.age_max) {
            throw InvalidRange("age band '" + o.label + "' falls outside age_range [" +
                               std::to_string(p.age_min) + ", " + std::to_string(p.age_max) + "]");
        }
        bands.push_back(band);
    }
}

} // namespace mobilicast
