#ifndef MOBILICAST_DIARY_PARSE_HPP
#define MOBILICAST_DIARY_PARSE_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mobilicast/backend.hpp"
#include "mobilicast/taxonomy.hpp"
#include "mobilicast/types.hpp"

namespace mobilicast
{

// Validity filters applied to parsed diaries. A diary failing any check is
// rejected whole; rows are never repaired or dropped individually.
struct FilterConfig {
    int max_gap_minutes = 120; // longest plausible travel time between places
    bool drop_code_97 = true; // reject diaries using the catch-all code
    bool require_times = true; // reject diaries with missing/unparseable times

    bool operator==(const FilterConfig&) const = default;
};

// Throws InvalidConfig when max_gap_minutes < 1.
void validate_filters(const FilterConfig& f);

enum class RejectionKind {
    NoTableFound,
    UnparseableTime,
    MissingTime,
    NegativeGap,
    GapTooLarge,
    NonMonotonicTimes,
    Code97Present,
    UnknownCode,
    EmptyTable,
};

std::string_view rejection_kind_name(RejectionKind k);

// Why one completion was discarded. Rejections are data, not errors: a batch
// keeps going and tallies them.
struct RejectionReason {
    RejectionKind kind = RejectionKind::NoTableFound;
    std::string detail;
};

// One raw table row as extracted (cells still text).
struct TableRow {
    std::string place;
    std::string arrival;
    std::string departure;
    std::string code;

    bool operator==(const TableRow&) const = default;
};

// Finds the first markdown table in `raw` whose header row names all four
// diary columns (Place Visited / Arrival Time / Departure Time / Location
// Type; case-insensitive, whitespace- and markup-tolerant), skips dash
// separator rows, and returns the data rows in order. Prose before and after
// the table, and any later tables, are ignored. Extra columns are tolerated;
// cells are matched to the four required columns by header position.
// Failure modes (NoTableFound, EmptyTable) come back as RejectionReason.
std::variant<std::vector<TableRow>, RejectionReason> extract_table(const std::string& raw);

// Parses extracted rows into a diary dated/attributed per `assignment`.
// Checks run in this order, first hit wins, whole diary rejected:
//   MissingTime, UnparseableTime (per row; skipped when !require_times —
//     then all times are zeroed unless every one parses cleanly),
//   UnknownCode (code not an integer in the survey code book),
//   NonMonotonicTimes (arrival_i > departure_i),
//   NegativeGap (arrival_{i+1} < departure_i),
//   GapTooLarge (arrival_{i+1} - departure_i > max_gap_minutes),
//   Code97Present (code 97 while drop_code_97).
std::variant<TravelDiary, RejectionReason> parse_diary(const std::vector<TableRow>& rows,
                                                       const SurveyAssignment& assignment,
                                                       const FilterConfig& filters,
                                                       const LocationTaxonomy& taxonomy = LocationTaxonomy::builtin());

// Rejection counts by kind name, e.g. {"GapTooLarge": 3}.
using RejectionSummary = std::map<std::string, std::size_t>;

struct BuildResult {
    Corpus corpus; // all accepted diaries, source = Generated
    RejectionSummary rejections;
};

// Runs extract_table + parse_diary over every record. Records that failed at
// generation time (record.error set) have no table and count as NoTableFound.
// accepted + rejected always equals the input size.
BuildResult build_corpus(const std::vector<GenerationRecord>& records, const FilterConfig& filters,
                         const LocationTaxonomy& taxonomy);

std::string rejection_summary_to_json(const RejectionSummary& summary);

} // namespace mobilicast

#endif // MOBILICAST_DIARY_PARSE_HPP
