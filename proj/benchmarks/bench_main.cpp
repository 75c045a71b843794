// Microbenchmarks for the hot paths: diary simulation, table parsing,
// transition estimation, chain edit distance, and clustering.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "mobilicast/clustering.hpp"
#include "mobilicast/diary_parse.hpp"
#include "mobilicast/evaluation.hpp"
#include "mobilicast/mock_backend.hpp"
#include "mobilicast/persona_gen.hpp"
#include "mobilicast/rng.hpp"
#include "mobilicast/types.hpp"

namespace
{

using namespace mobilicast;

SurveyAssignment bench_assignment()
{
    Persona p;
    p.sex = "female";
    p.age = 34;
    p.race = "White alone";
    p.in_labor_force = true;
    p.employed = true;
    p.occupation = "education";
    p.marital_status = "married";
    p.household_type = "married couple family";
    p.region_id = "bench";
    return make_assignment(std::move(p), Date{2016, 7, 14});
}

std::string bench_completion(std::uint64_t seed)
{
    MockBackend backend(default_mock_params());
    return backend.generate("", DecodingConfig{}, seed).text;
}

Corpus bench_corpus(std::size_t diaries, std::uint64_t seed)
{
    const MockParams params = default_mock_params();
    const auto assignment = bench_assignment();
    Corpus corpus;
    corpus.region_id = "bench";
    corpus.source = CorpusSource::Generated;
    Rng master(seed);
    for (std::size_t i = 0; i < diaries; ++i) {
        Rng day = master.derive(i);
        TravelDiary diary;
        diary.persona_id = "bench-" + std::to_string(i);
        diary.survey_date = assignment.survey_date;
        diary.entries = visits_to_entries(simulate_day(params, day));
        corpus.diaries.push_back(std::move(diary));
    }
    return corpus;
}

void bm_simulate_day(benchmark::State& state)
{
    const MockParams params = default_mock_params();
    Rng rng(42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_day(params, rng));
    }
}
BENCHMARK(bm_simulate_day);

void bm_extract_and_parse(benchmark::State& state)
{
    const std::string completion = bench_completion(7);
    const auto assignment = bench_assignment();
    const FilterConfig filters;
    for (auto _ : state) {
        const auto rows = extract_table(completion);
        benchmark::DoNotOptimize(
            parse_diary(std::get<std::vector<TableRow>>(rows), assignment, filters));
    }
}
BENCHMARK(bm_extract_and_parse);

void bm_transition_model(benchmark::State& state)
{
    const Corpus corpus = bench_corpus(static_cast<std::size_t>(state.range(0)), 9);
    const auto& taxonomy = LocationTaxonomy::builtin();
    for (auto _ : state) {
        benchmark::DoNotOptimize(transition_model(corpus, taxonomy, TypeScheme::Eleven, 1));
    }
}
BENCHMARK(bm_transition_model)->Arg(100)->Arg(1000);

void bm_levenshtein(benchmark::State& state)
{
    std::vector<int> a, b;
    Rng rng(3);
    for (int i = 0; i < 64; ++i) {
        a.push_back(static_cast<int>(rng.uniform_index(11)));
        b.push_back(static_cast<int>(rng.uniform_index(11)));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(levenshtein(a, b));
    }
}
BENCHMARK(bm_levenshtein);

void bm_ward_cluster(benchmark::State& state)
{
    std::vector<LabeledVector> vectors;
    Rng rng(11);
    for (int i = 0; i < 24; ++i) {
        LabeledVector v;
        v.label = "city-" + std::to_string(i);
        for (int d = 0; d < 121; ++d) {
            v.values.push_back(rng.next_double());
        }
        vectors.push_back(std::move(v));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(ward_cluster(vectors, 2));
    }
}
BENCHMARK(bm_ward_cluster);

} // namespace

BENCHMARK_MAIN();
