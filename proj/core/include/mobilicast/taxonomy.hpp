#ifndef MOBILICAST_TAXONOMY_HPP
#define MOBILICAST_TAXONOMY_HPP

#include <cstddef>
#include <string_view>
#include <vector>

namespace mobilicast
{

// Collapsed location-type vocabularies used for sequence analysis. The survey
// itself records one of 20 numeric location codes per diary row; analysis
// collapses them to 11 activity types, and place-of-interest comparisons
// collapse further to 6.
enum class TypeScheme {
    Eleven, // 11 activity types
    Six, // 6 point-of-interest categories
};

inline constexpr std::size_t kTypeCount11 = 11;
inline constexpr std::size_t kTypeCount6 = 6;

// Canonical 11-type indices. The enumeration order IS the canonical row /
// column order of every transition matrix and report under TypeScheme::Eleven.
enum class Type11 : int {
    Home = 0,
    Work = 1,
    Community = 2,
    InTransit = 3,
    Education = 4,
    Care = 5,
    Shopping = 6,
    EatMeal = 7,
    Other = 8,
    Recreational = 9,
    Social = 10,
};

// Canonical 6-type indices, same convention.
enum class Type6 : int {
    Home = 0,
    Work = 1,
    School = 2,
    Restaurant = 3,
    Recreation = 4,
    Other = 5,
};

// The fixed survey code book plus both collapse maps.
class LocationTaxonomy
{
public:
    // Singleton with the built-in 20-code survey vocabulary.
    static const LocationTaxonomy& builtin();

    bool valid_code(int code) const;

    // Human-readable label as it appears in the survey instructions,
    // e.g. code 3 -> "Work". Throws InvalidRange on unknown codes.
    std::string_view code_label(int code) const;

    // Canonical type index of `code` under `scheme`. Throws InvalidRange on
    // unknown codes.
    int type_index(int code, TypeScheme scheme) const;

    Type11 type11(int code) const;
    Type6 type6(int code) const;

    // One survey code that maps back onto the given 11-type index, for
    // rendering collapsed sequences as diary rows again.
    int representative_code(Type11 t) const;

    // All valid codes in ascending numeric order (1..19 then 97).
    const std::vector<int>& codes() const;

private:
    LocationTaxonomy();

    std::vector<int> m_codes;
};

std::size_t scheme_size(TypeScheme scheme);

// Stable identifier used in CLI flags, config files and reports:
// "type11" / "type6".
std::string_view scheme_id(TypeScheme scheme);

// Accepts "type11"/"11" and "type6"/"6"; throws ParseFailure otherwise.
TypeScheme parse_scheme(std::string_view text);

// Display name of a canonical type index under the given scheme,
// e.g. (Eleven, 3) -> "In Transit".
std::string_view type_name(TypeScheme scheme, int index);

std::string_view type_name(Type11 t);
std::string_view type_name(Type6 t);

// All display names of a scheme in canonical order.
std::vector<std::string_view> type_names(TypeScheme scheme);

} // namespace mobilicast

#endif // MOBILICAST_TAXONOMY_HPP
