#ifndef MOBILICAST_COMMANDS_HPP
#define MOBILICAST_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "mobilicast/backend.hpp"
#include "mobilicast/clustering.hpp"
#include "mobilicast/diary_parse.hpp"
#include "mobilicast/persona_gen.hpp"
#include "mobilicast/priors.hpp"
#include "mobilicast/report.hpp"
#include "mobilicast/taxonomy.hpp"

namespace mobilicast
{

// Everything a generation run needs. Loaded from a JSON config file; the
// seed is mandatory — no command ever draws entropy implicitly.
struct RunConfig {
    std::string region_id; // overrides the prior file's region when non-empty
    std::string priors_path;
    Date date_start{0, 0, 0}; // invalid until a date_range is supplied
    Date date_end{0, 0, 0};
    std::size_t count = 0;
    std::string backend = "mock"; // "mock" | "http"
    std::string endpoint; // http backend
    std::string model; // http backend
    std::string mock_params_path; // mock backend; empty = built-in parameters
    DecodingConfig decoding;
    std::uint64_t seed = 0;
    bool has_seed = false;
    FilterConfig filters;
    TypeScheme scheme = TypeScheme::Eleven;
    int concurrency_limit = 1;
    std::string prompt_template_path; // empty = built-in template

    bool operator==(const RunConfig&) const = default;
};

// Strict parse: unknown top-level keys are rejected so config typos surface
// before any work happens. Throws ParseFailure on malformed JSON and
// InvalidConfig on missing/mistyped fields.
RunConfig parse_run_config_json(const std::string& text, const std::string& origin = "<config>");
RunConfig load_run_config(const std::filesystem::path& path);

// Cross-field checks: count >= 1, seed present, valid date range, known
// backend with its required fields, valid decoding + filters,
// concurrency_limit >= 1.
void validate_run_config(const RunConfig& config);

// The run's survey assignments: persona i and date i are drawn from streams
// derived from (seed, i), so assignment i is stable regardless of count.
std::vector<SurveyAssignment> make_assignments(const RunConfig& config, const PriorSet& priors);

// Instantiates the configured backend ("mock" or "http").
std::unique_ptr<TextGenerator> make_backend(const RunConfig& config);

struct GenerateOutcome {
    std::size_t ok = 0;
    std::size_t failed = 0; // items whose record carries an error instead of text
};

// Full generation run: priors -> assignments -> prompts -> batch -> records
// JSONL at `records_out`. Nothing is written until the whole batch finished.
GenerateOutcome cmd_generate(const RunConfig& config, const std::filesystem::path& records_out);

struct ParseOutcome {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
};

// Records JSONL -> validated corpus JSON + rejection summary JSON. The
// scheme parameter is accepted for interface symmetry; parsing itself is
// scheme-independent (diaries store raw survey codes).
ParseOutcome cmd_parse(const std::filesystem::path& records_path, const FilterConfig& filters,
                       TypeScheme scheme, const std::filesystem::path& corpus_out,
                       const std::filesystem::path& rejections_out);

// Evaluates generated against actual (with optional other-region reference
// corpora widening the chain-precision reference set) and writes report.json
// plus the plot-data CSVs into out_dir.
EvalReport cmd_eval(const std::filesystem::path& actual_path,
                    const std::filesystem::path& generated_path,
                    const std::vector<std::filesystem::path>& reference_paths, TypeScheme scheme,
                    const std::filesystem::path& out_dir);

// Uniformly down-samples `corpus` to n diaries without replacement
// (deterministic per seed). Throws InsufficientData when n exceeds the
// corpus size.
Corpus sample_corpus(const Corpus& corpus, std::size_t n, std::uint64_t seed);

// Down-samples the larger of generated/pol to the smaller's diary count,
// evaluates both against actual under the 6-type scheme, and writes one JSON
// document to out_path.
PolComparison cmd_compare_pol(const std::filesystem::path& actual_path,
                              const std::filesystem::path& generated_path,
                              const std::filesystem::path& pol_path, std::uint64_t seed,
                              const std::filesystem::path& out_path);

// One first-order transition model per corpus file -> flattened vectors ->
// Ward clustering; labels are corpus region ids (file stem when a region id
// is empty). Writes dendrogram + assignments JSON to out_path.
ClusterResult cmd_cluster(const std::vector<std::filesystem::path>& corpus_paths, std::size_t k,
                          TypeScheme scheme, const std::filesystem::path& out_path);

// Samples n diaries from the pooled non-excluded corpora and writes
// prompt/completion training pairs as JSONL. Returns the number of pairs.
std::size_t cmd_export_finetune(const std::vector<std::filesystem::path>& corpus_paths,
                                std::size_t n, const std::vector<std::string>& exclude_regions,
                                std::uint64_t seed, const std::filesystem::path& out_path);

} // namespace mobilicast

#endif // MOBILICAST_COMMANDS_HPP
