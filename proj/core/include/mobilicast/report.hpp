#ifndef MOBILICAST_REPORT_HPP
#define MOBILICAST_REPORT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "mobilicast/evaluation.hpp"

namespace mobilicast
{

// The full actual-vs-generated comparison for one region.
struct EvalReport {
    TypeScheme scheme = TypeScheme::Eleven;
    std::string actual_region;
    std::string generated_region;

    PatternStats actual_pattern;
    PatternStats generated_pattern;
    bool actual_has_time_data = true;
    bool generated_has_time_data = true;
    double delta_avg_locations = 0.0; // generated - actual
    double delta_avg_travel_hours = 0.0; // meaningful only when both have time data

    double frobenius_order1 = 0.0;
    double frobenius_order2 = 0.0;

    DestinationProbs actual_destinations;
    DestinationProbs generated_destinations;

    ChainMetrics chains;
    std::map<int, double> unmatched_histogram;
    // Ranked over the actual distribution; actual_cumulative doubles as the
    // actual corpus's own reference curve.
    MatchCurve curve;
};

// Computes every section. `references` are other regions' actual corpora;
// the precision_all reference is actual ∪ references. Throws EmptyCorpus on
// an empty input corpus.
EvalReport evaluate_corpora(const Corpus& actual, const Corpus& generated,
                            const std::vector<Corpus>& references, const LocationTaxonomy& taxonomy,
                            TypeScheme scheme);

// One JSON document with pattern / trip / chain sections. Travel-time fields
// of a corpus without time data are null.
std::string report_to_json_text(const EvalReport& report);

// Writes report.json plus the plot-data CSVs into `out_dir` (created if
// missing): location_count_histogram.csv, travel_time_quartiles.csv,
// destination_diff.csv, cumulative_match_curve.csv, top_chains.csv.
void write_report_files(const EvalReport& report, const std::filesystem::path& out_dir);

// Human-readable chain text for exports: "Home -> Work -> Home".
std::string chain_to_text(const std::vector<int>& chain, TypeScheme scheme);

// Side-by-side comparison of an LLM-generated corpus and a simulation
// baseline corpus against the same actual corpus (both evaluated under the
// 6-type scheme at equal sample sizes).
struct PolComparison {
    std::size_t sample_size = 0; // diaries per generated corpus after matching
    EvalReport llm;
    EvalReport pol;
};

std::string pol_comparison_to_json_text(const PolComparison& cmp);

} // namespace mobilicast

#endif // MOBILICAST_REPORT_HPP
