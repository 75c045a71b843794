#include "mobilicast/taxonomy.hpp"

#include <array>
#include <string>

#include "mobilicast/errors.hpp"

namespace mobilicast
{

namespace
{

struct CodeRow {
    int code;
    std::string_view label;
    Type11 eleven;
    Type6 six;
};

// The 20-code survey vocabulary with both collapse maps. Labels are verbatim
// from the survey instructions (they also feed the prompt's code list).
constexpr std::array<CodeRow, 20> kCodeBook = {{
    {1, "Regular home activities (chores, sleep)", Type11::Home, Type6::Home},
    {2, "Work from home (paid)", Type11::Home, Type6::Home},
    {3, "Work", Type11::Work, Type6::Work},
    {4, "Work-related meeting / trip", Type11::Work, Type6::Work},
    {5, "Volunteer activities (not paid)", Type11::Community, Type6::Recreation},
    {6, "Drop off / pick up someone", Type11::InTransit, Type6::Other},
    {7, "Change type of transportation", Type11::InTransit, Type6::Other},
    {8, "Attend school as a student", Type11::Education, Type6::School},
    {9, "Attend child care", Type11::Care, Type6::Other},
    {10, "Attend adult care", Type11::Care, Type6::Other},
    {11, "Buy goods (groceries, clothes, appliances, gas)", Type11::Shopping, Type6::Other},
    {12, "Buy services (dry cleaners, banking, service a car, etc)", Type11::Shopping, Type6::Other},
    {13, "Buy meals (go out for a meal, snack, carry-out)", Type11::EatMeal, Type6::Restaurant},
    {14, "Other general errands (post office, library)", Type11::Other, Type6::Other},
    {15, "Recreational activities (visit parks, movies, bars, etc)", Type11::Recreational, Type6::Recreation},
    {16, "Exercise (go for a jog, walk, walk the dog, go to the gym, etc)", Type11::Recreational,
     Type6::Recreation},
    {17, "Visit friends or relatives", Type11::Social, Type6::Other},
    {18, "Health care visit (medical, dental, therapy)", Type11::Social, Type6::Other},
    {19, "Religious or other community activities", Type11::Community, Type6::Other},
    {97, "Something else", Type11::Other, Type6::Other},
}};

constexpr std::array<std::string_view, kTypeCount11> kNames11 = {
    "Home", "Work", "Community", "In Transit", "Education", "Care",
    "Shopping", "Eat Meal", "Other", "Recreational", "Social",
};

constexpr std::array<std::string_view, kTypeCount6> kNames6 = {
    "Home", "Work", "School", "Restaurant", "Recreation", "Other",
};

// One survey code per 11-type, used when a collapsed sequence has to be
// written back out as diary rows.
constexpr std::array<int, kTypeCount11> kRepresentative = {
    1, // Home
    3, // Work
    19, // Community
    7, // In Transit
    8, // Education
    9, // Care
    11, // Shopping
    13, // Eat Meal
    14, // Other
    15, // Recreational
    17, // Social
};

const CodeRow* find_code(int code)
{
    for (const auto& row : kCodeBook) {
        if (row.code == code) {
            return &row;
        }
    }
    return nullptr;
}

const CodeRow& require_code(int code)
{
    const CodeRow* row = find_code(code);
    if (row == nullptr) {
        throw InvalidRange("unknown location code " + std::to_string(code));
    }
    return *row;
}

} // namespace

LocationTaxonomy::LocationTaxonomy()
{
    m_codes.reserve(kCodeBook.size());
    for (const auto& row : kCodeBook) {
        m_codes.push_back(row.code);
    }
}

const LocationTaxonomy& LocationTaxonomy::builtin()
{
    static const LocationTaxonomy instance;
    return instance;
}

bool LocationTaxonomy::valid_code(int code) const
{
    return find_code(code) != nullptr;
}

std::string_view LocationTaxonomy::code_label(int code) const
{
    return require_code(code).label;
}

int LocationTaxonomy::type_index(int code, TypeScheme scheme) const
{
    const CodeRow& row = require_code(code);
    return scheme == TypeScheme::Eleven ? static_cast<int>(row.eleven) : static_cast<int>(row.six);
}

Type11 LocationTaxonomy::type11(int code) const
{
    return require_code(code).eleven;
}

Type6 LocationTaxonomy::type6(int code) const
{
    return require_code(code).six;
}

int LocationTaxonomy::representative_code(Type11 t) const
{
    const int idx = static_cast<int>(t);
    if (idx < 0 || idx >= static_cast<int>(kTypeCount11)) {
        throw InvalidRange("representative_code: bad type index " + std::to_string(idx));
    }
    return kRepresentative[static_cast<std::size_t>(idx)];
}

const std::vector<int>& LocationTaxonomy::codes() const
{
    return m_codes;
}

std::size_t scheme_size(TypeScheme scheme)
{
    return scheme == TypeScheme::Eleven ? kTypeCount11 : kTypeCount6;
}

std::string_view scheme_id(TypeScheme scheme)
{
    return scheme == TypeScheme::Eleven ? "type11" : "type6";
}

TypeScheme parse_scheme(std::string_view text)
{
    if (text == "type11" || text == "11") {
        return TypeScheme::Eleven;
    }
    if (text == "type6" || text == "6") {
        return TypeScheme::Six;
    }
    throw ParseFailure("unknown type scheme '" + std::string(text) + "' (expected type11 or type6)");
}

std::string_view type_name(TypeScheme scheme, int index)
{
    const std::size_t n = scheme_size(scheme);
    if (index < 0 || static_cast<std::size_t>(index) >= n) {
        throw InvalidRange("type_name: index " + std::to_string(index) + " out of range for " +
                           std::string(scheme_id(scheme)));
    }
    return scheme == TypeScheme::Eleven ? kNames11[static_cast<std::size_t>(index)]
                                        : kNames6[static_cast<std::size_t>(index)];
}

std::string_view type_name(Type11 t)
{
    return type_name(TypeScheme::Eleven, static_cast<int>(t));
}

std::string_view type_name(Type6 t)
{
    return type_name(TypeScheme::Six, static_cast<int>(t));
}

std::vector<std::string_view> type_names(TypeScheme scheme)
{
    std::vector<std::string_view> out;
    const std::size_t n = scheme_size(scheme);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(type_name(scheme, static_cast<int>(i)));
    }
    return out;
}

} // namespace mobilicast
