#include "mobilicast/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mobilicast/errors.hpp"

namespace mobilicast
{

int travel_time_minutes(const TravelDiary& diary)
{
    int total = 0;
    for (std::size_t i = 1; i < diary.entries.size(); ++i) {
        total += diary.entries[i].arrival_min - diary.entries[i - 1].departure_min;
    }
    return total;
}

bool corpus_has_time_data(const Corpus& corpus)
{
    for (const auto& d : corpus.diaries) {
        for (std::size_t i = 0; i < d.entries.size(); ++i) {
            if (d.entries[i].departure_min > d.entries[i].arrival_min) {
                return true;
            }
            if (i > 0 && d.entries[i].arrival_min > d.entries[i - 1].departure_min) {
                return true;
            }
        }
    }
    return false;
}

std::array<double, 5> quartiles(std::vector<double> values)
{
    if (values.empty()) {
        throw EmptyCorpus("quartiles of an empty sample");
    }
    std::sort(values.begin(), values.end());
    const auto at_quantile = [&values](double q) {
        const double h = static_cast<double>(values.size() - 1) * q;
        const std::size_t lo = static_cast<std::size_t>(h);
        const std::size_t hi = std::min(lo + 1, values.size() - 1);
        const double frac = h - static_cast<double>(lo);
        return values[lo] + frac * (values[hi] - values[lo]);
    };
    return {values.front(), at_quantile(0.25), at_quantile(0.5), at_quantile(0.75), values.back()};
}

PatternStats pattern_stats(const Corpus& corpus)
{
    if (corpus.diaries.empty()) {
        throw EmptyCorpus("pattern_stats needs at least one diary");
    }
    PatternStats s;
    s.n_diaries = corpus.diaries.size();

    std::vector<double> travel_hours;
    travel_hours.reserve(s.n_diaries);
    double loc_sum = 0.0;
    for (const auto& d : corpus.diaries) {
        loc_sum += static_cast<double>(d.entries.size());
        ++s.location_count_histogram[d.entries.size()];
        travel_hours.push_back(static_cast<double>(travel_time_minutes(d)) / 60.0);
    }
    s.avg_locations = loc_sum / static_cast<double>(s.n_diaries);
    double hour_sum = 0.0;
    for (double h : travel_hours) {
        hour_sum += h;
    }
    s.avg_travel_hours = hour_sum / static_cast<double>(s.n_diaries);
    s.travel_time_quartiles = quartiles(travel_hours);

    // Box-plot whiskers: the extreme data points inside the 1.5 IQR fences.
    const double q1 = s.travel_time_quartiles[1];
    const double q3 = s.travel_time_quartiles[3];
    const double iqr = q3 - q1;
    const double lo_fence = q1 - 1.5 * iqr;
    const double hi_fence = q3 + 1.5 * iqr;
    s.whisker_low = s.travel_time_quartiles[4];
    s.whisker_high = s.travel_time_quartiles[0];
    for (double h : travel_hours) {
        if (h >= lo_fence) {
            s.whisker_low = std::min(s.whisker_low, h);
        }
        if (h <= hi_fence) {
            s.whisker_high = std::max(s.whisker_high, h);
        }
    }
    return s;
}

std::vector<int> activity_sequence(const TravelDiary& diary, const LocationTaxonomy& taxonomy,
                                   TypeScheme scheme)
{
    std::vector<int> seq;
    seq.reserve(diary.entries.size());
    for (const auto& e : diary.entries) {
        const int t = taxonomy.type_index(e.code, scheme);
        if (seq.empty() || seq.back() != t) {
            seq.push_back(t);
        }
    }
    return seq;
}

TransitionModel transition_model(const Corpus& corpus, const LocationTaxonomy& taxonomy,
                                 TypeScheme scheme, int order)
{
    if (corpus.diaries.empty()) {
        throw EmptyCorpus("transition_model needs at least one diary");
    }
    TransitionModel model = make_empty_model(scheme, order);
    for (const auto& d : corpus.diaries) {
        const auto seq = activity_sequence(d, taxonomy, scheme);
        add_sequence(model, seq);
    }
    finalize_probabilities(model);
    return model;
}

DestinationProbs destination_probs(const Corpus& corpus, const LocationTaxonomy& taxonomy,
                                   TypeScheme scheme)
{
    const std::size_t n = scheme_size(scheme);
    DestinationProbs out;
    out.order1.assign(n, 0.0);
    out.order2.assign(n, 0.0);

    std::vector<std::uint64_t> dest1(n, 0);
    std::vector<std::uint64_t> dest2(n, 0);
    for (const auto& d : corpus.diaries) {
        const auto seq = activity_sequence(d, taxonomy, scheme);
        for (std::size_t i = 1; i < seq.size(); ++i) {
            ++dest1[static_cast<std::size_t>(seq[i])];
            ++out.trips_order1;
            if (i >= 2) {
                ++dest2[static_cast<std::size_t>(seq[i])];
                ++out.trips_order2;
            }
        }
    }
    if (out.trips_order1 == 0) {
        throw NoTrips("corpus has no trips (no diary visits two distinct types)");
    }
    for (std::size_t t = 0; t < n; ++t) {
        out.order1[t] = static_cast<double>(dest1[t]) / static_cast<double>(out.trips_order1);
        if (out.trips_order2 > 0) {
            out.order2[t] = static_cast<double>(dest2[t]) / static_cast<double>(out.trips_order2);
        }
    }
    return out;
}

ChainDistribution chain_distribution(const Corpus& corpus, const LocationTaxonomy& taxonomy,
                                     TypeScheme scheme)
{
    if (corpus.diaries.empty()) {
        throw EmptyCorpus("chain_distribution needs at least one diary");
    }
    ChainDistribution dist;
    for (const auto& d : corpus.diaries) {
        ++dist.counts[activity_sequence(d, taxonomy, scheme)];
        ++dist.total;
    }
    return dist;
}

ChainDistribution merge_distributions(const std::vector<const ChainDistribution*>& parts)
{
    ChainDistribution merged;
    for (const auto* part : parts) {
        for (const auto& [chain, count] : part->counts) {
            merged.counts[chain] += count;
        }
        merged.total += part->total;
    }
    return merged;
}

PctPair chain_precision(const ChainDistribution& gen, const ChainDistribution& reference)
{
    PctPair out;
    if (gen.counts.empty()) {
        return out;
    }
    std::size_t matched_distinct = 0;
    std::uint64_t matched_weight = 0;
    for (const auto& [chain, count] : gen.counts) {
        if (reference.counts.count(chain) != 0) {
            ++matched_distinct;
            matched_weight += count;
        }
    }
    out.unique_pct = 100.0 * static_cast<double>(matched_distinct) /
                     static_cast<double>(gen.counts.size());
    out.weighted_pct = 100.0 * static_cast<double>(matched_weight) / static_cast<double>(gen.total);
    return out;
}

PctPair chain_recall(const ChainDistribution& gen, const ChainDistribution& actual)
{
    // Recall is precision with the roles swapped: how much of the actual
    // distribution the generated chains cover.
    return chain_precision(actual, gen);
}

double weighted_overlap(const ChainDistribution& a, const ChainDistribution& b)
{
    if (a.total == 0 || b.total == 0) {
        return 0.0;
    }
    double overlap = 0.0;
    for (const auto& [chain, count_a] : a.counts) {
        const auto it = b.counts.find(chain);
        if (it == b.counts.end()) {
            continue;
        }
        const double fa = static_cast<double>(count_a) / static_cast<double>(a.total);
        const double fb = static_cast<double>(it->second) / static_cast<double>(b.total);
        overlap += std::min(fa, fb);
    }
    return 100.0 * overlap;
}

int levenshtein(std::span<const int> a, std::span<const int> b)
{
    // Two-row dynamic program; O(|a|*|b|) time, O(|b|) space.
    const std::size_t m = b.size();
    std::vector<int> prev(m + 1);
    std::vector<int> curr(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        prev[j] = static_cast<int>(j);
    }
    for (std::size_t i = 1; i <= a.size(); ++i) {
        curr[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            const int sub_cost = a[i - 1] == b[j - 1] ? 0 : 1;
            curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, prev[j - 1] + sub_cost});
        }
        std::swap(prev, curr);
    }
    return prev[m];
}

std::map<int, double> unmatched_distance_histogram(const ChainDistribution& gen,
                                                   const ChainDistribution& actual)
{
    std::vector<const std::vector<int>*> unmatched;
    for (const auto& [chain, count] : gen.counts) {
        (void)count;
        if (actual.counts.count(chain) == 0) {
            unmatched.push_back(&chain);
        }
    }
    std::map<int, double> histogram;
    if (unmatched.empty()) {
        return histogram;
    }
    std::map<int, std::size_t> tally;
    for (const auto* chain : unmatched) {
        int best = std::numeric_limits<int>::max();
        for (const auto& [ref_chain, ref_count] : actual.counts) {
            (void)ref_count;
            best = std::min(best, levenshtein(*chain, ref_chain));
            if (best == 1) {
                break; // unmatched chains are never at distance 0
            }
        }
        ++tally[best];
    }
    for (const auto& [dist, count] : tally) {
        histogram[dist] = 100.0 * static_cast<double>(count) / static_cast<double>(unmatched.size());
    }
    return histogram;
}

MatchCurve cumulative_match_curve(const ChainDistribution& actual, const ChainDistribution& gen)
{
    std::vector<std::pair<const std::vector<int>*, std::uint64_t>> ranked;
    ranked.reserve(actual.counts.size());
    for (const auto& [chain, count] : actual.counts) {
        ranked.emplace_back(&chain, count);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) {
            return x.second > y.second;
        }
        return *x.first < *y.first;
    });

    MatchCurve curve;
    std::uint64_t actual_cum = 0;
    std::uint64_t gen_cum = 0;
    for (const auto& [chain, count] : ranked) {
        actual_cum += count;
        const auto it = gen.counts.find(*chain);
        if (it != gen.counts.end()) {
            gen_cum += it->second;
        }
        curve.chains.push_back(*chain);
        curve.actual_counts.push_back(count);
        curve.actual_cumulative.push_back(actual_cum);
        curve.gen_cumulative.push_back(gen_cum);
    }
    return curve;
}

} // namespace mobilicast
