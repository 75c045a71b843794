#ifndef MOBILICAST_EVALUATION_HPP
#define MOBILICAST_EVALUATION_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mobilicast/markov.hpp"
#include "mobilicast/taxonomy.hpp"
#include "mobilicast/types.hpp"

namespace mobilicast
{

// Diary-level aggregates for one corpus.
struct PatternStats {
    std::size_t n_diaries = 0;
    double avg_locations = 0.0; // mean raw entry count (no collapsing)
    double avg_travel_hours = 0.0;
    std::map<std::size_t, std::size_t> location_count_histogram; // entries -> diaries
    std::array<double, 5> travel_time_quartiles{}; // min, q1, median, q3, max (hours)
    double whisker_low = 0.0; // lowest point >= q1 - 1.5 IQR
    double whisker_high = 0.0; // highest point <= q3 + 1.5 IQR

    bool operator==(const PatternStats&) const = default;
};

// Distribution of collapsed activity chains. Keys are canonical type-index
// sequences; total equals the diary count.
struct ChainDistribution {
    std::map<std::vector<int>, std::uint64_t> counts;
    std::uint64_t total = 0;
};

// A percentage over distinct chains and its occurrence-weighted counterpart.
struct PctPair {
    double unique_pct = 0.0;
    double weighted_pct = 0.0;

    bool operator==(const PctPair&) const = default;
};

struct ChainMetrics {
    PctPair precision_loc; // generated chain appears in this region's actual
    PctPair precision_all; // ... in any region's actual
    PctPair recall; // actual chain appears among generated
    double weighted_overlap_pct = 0.0;

    bool operator==(const ChainMetrics&) const = default;
};

// Marginal trip-destination shares. order1 covers every trip; order2 covers
// only trips with a two-step history (marginalized over contexts).
struct DestinationProbs {
    std::vector<double> order1;
    std::vector<double> order2;
    std::uint64_t trips_order1 = 0;
    std::uint64_t trips_order2 = 0;
};

// Rank-ordered overlay of chain counts: distinct actual chains sorted by
// descending count (count ties broken by ascending chain), with cumulative
// actual counts and the cumulative generated counts over the same chains.
struct MatchCurve {
    std::vector<std::vector<int>> chains;
    std::vector<std::uint64_t> actual_counts;
    std::vector<std::uint64_t> actual_cumulative;
    std::vector<std::uint64_t> gen_cumulative;
};

// Total minutes spent traveling: the sum of gaps between consecutive
// entries. Single-entry diaries travel 0 minutes.
int travel_time_minutes(const TravelDiary& diary);

// True when any entry has a positive duration or any consecutive pair a
// positive gap — i.e. the corpus carries usable clock information.
bool corpus_has_time_data(const Corpus& corpus);

// Quartiles (min, q1, median, q3, max) by linear interpolation on sorted
// values; input must be non-empty.
std::array<double, 5> quartiles(std::vector<double> values);

// Throws EmptyCorpus on an empty corpus.
PatternStats pattern_stats(const Corpus& corpus);

// Entry codes mapped through the scheme, consecutive duplicates collapsed.
// Never empty for a valid diary; never has adjacent equal elements.
std::vector<int> activity_sequence(const TravelDiary& diary, const LocationTaxonomy& taxonomy,
                                   TypeScheme scheme);

// Estimates the order-1/order-2 transition matrix over the corpus's
// collapsed sequences. Rows never observed stay all-zero.
// Throws EmptyCorpus.
TransitionModel transition_model(const Corpus& corpus, const LocationTaxonomy& taxonomy,
                                 TypeScheme scheme, int order);

// Throws NoTrips when no diary yields a length-2 collapsed sequence.
DestinationProbs destination_probs(const Corpus& corpus, const LocationTaxonomy& taxonomy,
                                   TypeScheme scheme);

// Throws EmptyCorpus.
ChainDistribution chain_distribution(const Corpus& corpus, const LocationTaxonomy& taxonomy,
                                     TypeScheme scheme);

// Union of several distributions (counts added).
ChainDistribution merge_distributions(const std::vector<const ChainDistribution*>& parts);

// 100 * |distinct gen ∩ distinct ref| / |distinct gen|, and the
// gen-count-weighted share of chains present in the reference.
PctPair chain_precision(const ChainDistribution& gen, const ChainDistribution& reference);

// 100 * |distinct actual ∩ distinct gen| / |distinct actual|, and the
// actual-count-weighted share of chains present among generated.
PctPair chain_recall(const ChainDistribution& gen, const ChainDistribution& actual);

// Histogram intersection of relative frequencies, in percent. Symmetric;
// 100 iff the distributions are identical.
double weighted_overlap(const ChainDistribution& a, const ChainDistribution& b);

// Token-level edit distance (insert/delete/substitute, unit cost).
int levenshtein(std::span<const int> a, std::span<const int> b);

// For each distinct generated chain absent from actual: the minimum
// levenshtein distance to any distinct actual chain. Returns the percentage
// of unmatched distinct chains per distance; empty map when every generated
// chain is matched.
std::map<int, double> unmatched_distance_histogram(const ChainDistribution& gen,
                                                   const ChainDistribution& actual);

MatchCurve cumulative_match_curve(const ChainDistribution& actual, const ChainDistribution& gen);

} // namespace mobilicast

#endif // MOBILICAST_EVALUATION_HPP
