#include "mobilicast/report.hpp"

#include <fstream>
#include <set>

#include "json.hpp"

#include "mobilicast/errors.hpp"

namespace mobilicast
{

namespace
{

using nlohmann::json;

json pattern_to_json(const std::string& region, const PatternStats& s, bool has_time)
{
    json histogram = json::object();
    for (const auto& [count, diaries] : s.location_count_histogram) {
        histogram[std::to_string(count)] = diaries;
    }
    json j = {
        {"region", region},
        {"n_diaries", s.n_diaries},
        {"avg_locations", s.avg_locations},
        {"location_count_histogram", std::move(histogram)},
        {"has_time_data", has_time},
    };
    if (has_time) {
        j["avg_travel_hours"] = s.avg_travel_hours;
        j["travel_time_quartiles"] = s.travel_time_quartiles;
        j["whiskers"] = {s.whisker_low, s.whisker_high};
    }
    else {
        // No usable clocks in this corpus; time aggregates would be noise.
        j["avg_travel_hours"] = nullptr;
        j["travel_time_quartiles"] = nullptr;
        j["whiskers"] = nullptr;
    }
    return j;
}

json pct_pair_to_json(const PctPair& p)
{
    return {{"unique_pct", p.unique_pct}, {"weighted_pct", p.weighted_pct}};
}

json report_to_json(const EvalReport& r)
{
    const bool both_timed = r.actual_has_time_data && r.generated_has_time_data;

    json delta = {{"avg_locations", r.delta_avg_locations}};
    delta["avg_travel_hours"] = both_timed ? json(r.delta_avg_travel_hours) : json(nullptr);

    json dest_types = json::array();
    for (const auto name : type_names(r.scheme)) {
        dest_types.push_back(std::string(name));
    }
    const auto diff_of = [](const std::vector<double>& a, const std::vector<double>& g) {
        std::vector<double> d(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            d[i] = a[i] - g[i];
        }
        return d;
    };

    json unmatched = json::object();
    for (const auto& [dist, pct] : r.unmatched_histogram) {
        unmatched[std::to_string(dist)] = pct;
    }

    json curve = json::array();
    for (std::size_t i = 0; i < r.curve.chains.size(); ++i) {
        curve.push_back({
            {"rank", i + 1},
            {"chain", chain_to_text(r.curve.chains[i], r.scheme)},
            {"actual_count", r.curve.actual_counts[i]},
            {"actual_cumulative", r.curve.actual_cumulative[i]},
            {"generated_cumulative", r.curve.gen_cumulative[i]},
        });
    }

    return {
        {"scheme", std::string(scheme_id(r.scheme))},
        {"pattern",
         {
             {"actual", pattern_to_json(r.actual_region, r.actual_pattern, r.actual_has_time_data)},
             {"generated",
              pattern_to_json(r.generated_region, r.generated_pattern, r.generated_has_time_data)},
             {"delta_generated_minus_actual", std::move(delta)},
         }},
        {"trip",
         {
             {"frobenius", {{"order1", r.frobenius_order1}, {"order2", r.frobenius_order2}}},
             {"destination",
              {
                  {"types", std::move(dest_types)},
                  {"actual_order1", r.actual_destinations.order1},
                  {"generated_order1", r.generated_destinations.order1},
                  {"diff_order1_actual_minus_generated",
                   diff_of(r.actual_destinations.order1, r.generated_destinations.order1)},
                  {"actual_order2", r.actual_destinations.order2},
                  {"generated_order2", r.generated_destinations.order2},
                  {"diff_order2_actual_minus_generated",
                   diff_of(r.actual_destinations.order2, r.generated_destinations.order2)},
                  {"actual_trips", r.actual_destinations.trips_order1},
                  {"generated_trips", r.generated_destinations.trips_order1},
              }},
         }},
        {"chains",
         {
             {"precision_loc", pct_pair_to_json(r.chains.precision_loc)},
             {"precision_all", pct_pair_to_json(r.chains.precision_all)},
             {"recall", pct_pair_to_json(r.chains.recall)},
             {"weighted_overlap_pct", r.chains.weighted_overlap_pct},
             {"unmatched_distance_histogram", std::move(unmatched)},
         }},
        {"cumulative_match_curve", std::move(curve)},
    };
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) {
        throw IoFailure("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw IoFailure("short write to " + path.string());
    }
}

} // namespace

std::string chain_to_text(const std::vector<int>& chain, TypeScheme scheme)
{
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i > 0) {
            out += " -> ";
        }
        out += std::string(type_name(scheme, chain[i]));
    }
    return out;
}

EvalReport evaluate_corpora(const Corpus& actual, const Corpus& generated,
                            const std::vector<Corpus>& references, const LocationTaxonomy& taxonomy,
                            TypeScheme scheme)
{
    if (actual.diaries.empty()) {
        throw EmptyCorpus("actual corpus is empty");
    }
    if (generated.diaries.empty()) {
        throw EmptyCorpus("generated corpus is empty");
    }

    EvalReport r;
    r.scheme = scheme;
    r.actual_region = actual.region_id;
    r.generated_region = generated.region_id;

    r.actual_pattern = pattern_stats(actual);
    r.generated_pattern = pattern_stats(generated);
    r.actual_has_time_data = corpus_has_time_data(actual);
    r.generated_has_time_data = corpus_has_time_data(generated);
    r.delta_avg_locations = r.generated_pattern.avg_locations - r.actual_pattern.avg_locations;
    r.delta_avg_travel_hours = r.generated_pattern.avg_travel_hours - r.actual_pattern.avg_travel_hours;

    for (int order : {1, 2}) {
        const auto model_a = transition_model(actual, taxonomy, scheme, order);
        const auto model_g = transition_model(generated, taxonomy, scheme, order);
        (order == 1 ? r.frobenius_order1 : r.frobenius_order2) = frobenius_diff(model_a, model_g);
    }

    r.actual_destinations = destination_probs(actual, taxonomy, scheme);
    r.generated_destinations = destination_probs(generated, taxonomy, scheme);

    const auto dist_actual = chain_distribution(actual, taxonomy, scheme);
    const auto dist_gen = chain_distribution(generated, taxonomy, scheme);

    std::vector<const ChainDistribution*> all_parts{&dist_actual};
    std::vector<ChainDistribution> ref_dists;
    ref_dists.reserve(references.size());
    for (const auto& ref : references) {
        if (!ref.diaries.empty()) {
            ref_dists.push_back(chain_distribution(ref, taxonomy, scheme));
        }
    }
    for (const auto& rd : ref_dists) {
        all_parts.push_back(&rd);
    }
    const auto dist_union = merge_distributions(all_parts);

    r.chains.precision_loc = chain_precision(dist_gen, dist_actual);
    r.chains.precision_all = chain_precision(dist_gen, dist_union);
    r.chains.recall = chain_recall(dist_gen, dist_actual);
    r.chains.weighted_overlap_pct = weighted_overlap(dist_gen, dist_actual);
    r.unmatched_histogram = unmatched_distance_histogram(dist_gen, dist_actual);
    r.curve = cumulative_match_curve(dist_actual, dist_gen);
    return r;
}

std::string report_to_json_text(const EvalReport& report)
{
    return report_to_json(report).dump(2) + "\n";
}

void write_report_files(const EvalReport& report, const std::filesystem::path& out_dir)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoFailure("cannot create " + out_dir.string() + ": " + ec.message());
    }

    write_text_file(out_dir / "report.json", report_to_json_text(report));

    // Location-count histogram, both corpora on a shared axis.
    {
        std::set<std::size_t> counts;
        for (const auto& [c, n] : report.actual_pattern.location_count_histogram) {
            (void)n;
            counts.insert(c);
        }
        for (const auto& [c, n] : report.generated_pattern.location_count_histogram) {
            (void)n;
            counts.insert(c);
        }
        std::string csv = "locations,actual_diaries,generated_diaries\n";
        for (std::size_t c : counts) {
            const auto at = [&](const PatternStats& s) -> std::size_t {
                const auto it = s.location_count_histogram.find(c);
                return it == s.location_count_histogram.end() ? 0 : it->second;
            };
            csv += std::to_string(c) + "," + std::to_string(at(report.actual_pattern)) + "," +
                   std::to_string(at(report.generated_pattern)) + "\n";
        }
        write_text_file(out_dir / "location_count_histogram.csv", csv);
    }

    // Travel-time box-plot data (only corpora with usable clocks).
    {
        std::string csv = "corpus,min,q1,median,q3,max,whisker_low,whisker_high\n";
        const auto row = [&csv](const std::string& name, const PatternStats& s) {
            csv += name;
            for (double q : s.travel_time_quartiles) {
                csv += "," + std::to_string(q);
            }
            csv += "," + std::to_string(s.whisker_low) + "," + std::to_string(s.whisker_high) + "\n";
        };
        if (report.actual_has_time_data) {
            row("actual", report.actual_pattern);
        }
        if (report.generated_has_time_data) {
            row("generated", report.generated_pattern);
        }
        write_text_file(out_dir / "travel_time_quartiles.csv", csv);
    }

    // Destination probabilities and their differences, both orders.
    {
        std::string csv = "type,order,actual,generated,actual_minus_generated\n";
        const auto names = type_names(report.scheme);
        for (int order : {1, 2}) {
            const auto& a = order == 1 ? report.actual_destinations.order1 : report.actual_destinations.order2;
            const auto& g =
                order == 1 ? report.generated_destinations.order1 : report.generated_destinations.order2;
            for (std::size_t t = 0; t < names.size(); ++t) {
                csv += std::string(names[t]) + "," + std::to_string(order) + "," + std::to_string(a[t]) +
                       "," + std::to_string(g[t]) + "," + std::to_string(a[t] - g[t]) + "\n";
            }
        }
        write_text_file(out_dir / "destination_diff.csv", csv);
    }

    // Full ranked curve; the actual_cumulative column is the reference curve.
    {
        std::string csv = "rank,chain,actual_count,actual_cumulative,generated_cumulative\n";
        for (std::size_t i = 0; i < report.curve.chains.size(); ++i) {
            csv += std::to_string(i + 1) + ",\"" + chain_to_text(report.curve.chains[i], report.scheme) +
                   "\"," + std::to_string(report.curve.actual_counts[i]) + "," +
                   std::to_string(report.curve.actual_cumulative[i]) + "," +
                   std::to_string(report.curve.gen_cumulative[i]) + "\n";
        }
        write_text_file(out_dir / "cumulative_match_curve.csv", csv);
    }

    // Top of the ranking as a compact table.
    {
        std::string csv = "rank,chain,actual_count,generated_count\n";
        const std::size_t top = std::min<std::size_t>(100, report.curve.chains.size());
        for (std::size_t i = 0; i < top; ++i) {
            const std::uint64_t gen_count =
                report.curve.gen_cumulative[i] - (i == 0 ? 0 : report.curve.gen_cumulative[i - 1]);
            csv += std::to_string(i + 1) + ",\"" + chain_to_text(report.curve.chains[i], report.scheme) +
                   "\"," + std::to_string(report.curve.actual_counts[i]) + "," +
                   std::to_string(gen_count) + "\n";
        }
        write_text_file(out_dir / "top_chains.csv", csv);
    }
}

std::string pol_comparison_to_json_text(const PolComparison& cmp)
{
    if (cmp.llm.scheme != cmp.pol.scheme) {
        throw SchemeMismatch("comparison sides evaluated under different type schemes");
    }
    const json j = {
        {"scheme", std::string(scheme_id(cmp.llm.scheme))},
        {"sample_size", cmp.sample_size},
        {"llm", report_to_json(cmp.llm)},
        {"pol", report_to_json(cmp.pol)},
    };
    return j.dump(2) + "\n";
}

} // namespace mobilicast
