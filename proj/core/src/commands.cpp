#include "mobilicast/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "mobilicast/batch.hpp"
#include "mobilicast/corpus_io.hpp"
#include "mobilicast/errors.hpp"
#include "mobilicast/finetune.hpp"
#include "mobilicast/http_backend.hpp"
#include "mobilicast/mock_backend.hpp"
#include "mobilicast/prompt.hpp"
#include "mobilicast/records_io.hpp"
#include "mobilicast/rng.hpp"

namespace mobilicast
{

namespace
{

using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoFailure("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoFailure("read error on " + path.string());
    }
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path);
    if (!out) {
        throw IoFailure("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw IoFailure("short write to " + path.string());
    }
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& origin, const std::string& where)
{
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find_if(known.begin(), known.end(),
                         [&key](const char* k) { return key == k; }) == known.end()) {
            throw InvalidConfig(origin + ": unknown " + where + " key '" + key + "'");
        }
    }
}

// Typed field access with config-flavored errors.
template <typename T>
T get_as(const json& obj, const char* key, const std::string& origin)
{
    try {
        return obj.at(key).get<T>();
    }
    catch (const json::exception& e) {
        throw InvalidConfig(origin + ": field '" + std::string(key) + "': " + e.what());
    }
}

DecodingConfig parse_decoding(const json& obj, const std::string& origin)
{
    reject_unknown_keys(obj, {"temperature", "top_k", "max_tokens"}, origin, "decoding");
    DecodingConfig d;
    if (obj.contains("temperature")) {
        d.temperature = get_as<double>(obj, "temperature", origin);
    }
    if (obj.contains("top_k")) {
        if (obj.at("top_k").is_null()) {
            d.top_k.reset();
        }
        else {
            d.top_k = get_as<int>(obj, "top_k", origin);
        }
    }
    if (obj.contains("max_tokens")) {
        d.max_tokens = get_as<int>(obj, "max_tokens", origin);
    }
    return d;
}

FilterConfig parse_filters(const json& obj, const std::string& origin)
{
    reject_unknown_keys(obj, {"max_gap_minutes", "drop_code_97", "require_times"}, origin,
                        "filters");
    FilterConfig f;
    if (obj.contains("max_gap_minutes")) {
        f.max_gap_minutes = get_as<int>(obj, "max_gap_minutes", origin);
    }
    if (obj.contains("drop_code_97")) {
        f.drop_code_97 = get_as<bool>(obj, "drop_code_97", origin);
    }
    if (obj.contains("require_times")) {
        f.require_times = get_as<bool>(obj, "require_times", origin);
    }
    return f;
}

Corpus load_named_corpus(const std::filesystem::path& path)
{
    std::vector<std::string> diagnostics;
    Corpus corpus = parse_corpus_json(read_text_file(path), path.string(), &diagnostics);
    for (const auto& message : diagnostics) {
        std::fprintf(stderr, "warning: %s\n", message.c_str());
    }
    return corpus;
}

} // namespace

RunConfig parse_run_config_json(const std::string& text, const std::string& origin)
{
    json j;
    try {
        j = json::parse(text);
    }
    catch (const json::parse_error& e) {
        throw ParseFailure(origin + ": " + e.what());
    }
    if (!j.is_object()) {
        throw InvalidConfig(origin + ": config must be a JSON object");
    }
    reject_unknown_keys(j,
                        {"region_id", "priors_path", "date_range", "count", "backend", "endpoint",
                         "model", "mock_params_path", "decoding", "seed", "filters", "scheme",
                         "concurrency_limit", "prompt_template_path"},
                        origin, "config");

    RunConfig c;
    if (j.contains("region_id")) {
        c.region_id = get_as<std::string>(j, "region_id", origin);
    }
    if (j.contains("priors_path")) {
        c.priors_path = get_as<std::string>(j, "priors_path", origin);
    }
    if (j.contains("date_range")) {
        const json& range = j.at("date_range");
        if (!range.is_array() || range.size() != 2 || !range[0].is_string() ||
            !range[1].is_string()) {
            throw InvalidConfig(origin + ": date_range must be [start, end] date strings");
        }
        c.date_start = parse_date(range[0].get<std::string>());
        c.date_end = parse_date(range[1].get<std::string>());
    }
    if (j.contains("count")) {
        c.count = get_as<std::size_t>(j, "count", origin);
    }
    if (j.contains("backend")) {
        c.backend = get_as<std::string>(j, "backend", origin);
    }
    if (j.contains("endpoint")) {
        c.endpoint = get_as<std::string>(j, "endpoint", origin);
    }
    if (j.contains("model")) {
        c.model = get_as<std::string>(j, "model", origin);
    }
    if (j.contains("mock_params_path")) {
        c.mock_params_path = get_as<std::string>(j, "mock_params_path", origin);
    }
    if (j.contains("decoding")) {
        if (!j.at("decoding").is_object()) {
            throw InvalidConfig(origin + ": decoding must be an object");
        }
        c.decoding = parse_decoding(j.at("decoding"), origin);
    }
    if (j.contains("seed")) {
        c.seed = get_as<std::uint64_t>(j, "seed", origin);
        c.has_seed = true;
    }
    if (j.contains("filters")) {
        if (!j.at("filters").is_object()) {
            throw InvalidConfig(origin + ": filters must be an object");
        }
        c.filters = parse_filters(j.at("filters"), origin);
    }
    if (j.contains("scheme")) {
        c.scheme = parse_scheme(get_as<std::string>(j, "scheme", origin));
    }
    if (j.contains("concurrency_limit")) {
        c.concurrency_limit = get_as<int>(j, "concurrency_limit", origin);
    }
    if (j.contains("prompt_template_path")) {
        c.prompt_template_path = get_as<std::string>(j, "prompt_template_path", origin);
    }
    return c;
}

RunConfig load_run_config(const std::filesystem::path& path)
{
    return parse_run_config_json(read_text_file(path), path.string());
}

void validate_run_config(const RunConfig& config)
{
    if (config.priors_path.empty()) {
        throw InvalidConfig("priors_path is required");
    }
    if (config.count < 1) {
        throw InvalidConfig("count must be >= 1");
    }
    if (!config.has_seed) {
        throw InvalidConfig("seed is required (runs never draw implicit entropy)");
    }
    if (!is_valid_date(config.date_start) || !is_valid_date(config.date_end)) {
        throw InvalidConfig("date_range is required");
    }
    if (config.date_end < config.date_start) {
        throw InvalidRange("date_range end " + format_date(config.date_end) +
                           " precedes start " + format_date(config.date_start));
    }
    if (config.backend == "http") {
        if (config.endpoint.empty() || config.model.empty()) {
            throw InvalidConfig("http backend needs endpoint and model");
        }
    }
    else if (config.backend != "mock") {
        throw InvalidConfig("unknown backend '" + config.backend + "' (expected mock or http)");
    }
    if (config.concurrency_limit < 1) {
        throw InvalidConfig("concurrency_limit must be >= 1");
    }
    validate_decoding(config.decoding);
    validate_filters(config.filters);
}

std::vector<SurveyAssignment> make_assignments(const RunConfig& config, const PriorSet& priors)
{
    const Rng master(config.seed);
    std::vector<SurveyAssignment> out;
    out.reserve(config.count);
    for (std::size_t i = 0; i < config.count; ++i) {
        // Channels 1/2 per index; channel 0 is the batch's backend seed.
        Rng persona_rng = master.derive(i, 1);
        Rng date_rng = master.derive(i, 2);
        Persona persona = sample_persona(priors, persona_rng);
        const Date date = sample_date(config.date_start, config.date_end, date_rng);
        out.push_back(make_assignment(std::move(persona), date));
    }
    return out;
}

std::unique_ptr<TextGenerator> make_backend(const RunConfig& config)
{
    if (config.backend == "mock") {
        MockParams params = config.mock_params_path.empty()
                                ? default_mock_params()
                                : load_mock_params(config.mock_params_path);
        return std::make_unique<MockBackend>(std::move(params));
    }
    if (config.backend == "http") {
        HttpBackendConfig http;
        http.endpoint = config.endpoint;
        http.model = config.model;
        return std::make_unique<HttpBackend>(std::move(http));
    }
    throw InvalidConfig("unknown backend '" + config.backend + "'");
}

GenerateOutcome cmd_generate(const RunConfig& config, const std::filesystem::path& records_out)
{
    validate_run_config(config);

    PriorSet priors = load_priors(config.priors_path);
    validate_priors(priors);
    if (!config.region_id.empty()) {
        priors.region_id = config.region_id;
    }

    const std::string template_text = config.prompt_template_path.empty()
                                          ? default_prompt_template()
                                          : read_text_file(config.prompt_template_path);

    const auto assignments = make_assignments(config, priors);
    const auto items = make_batch_items(assignments, config.seed, template_text);
    const auto backend = make_backend(config);
    const auto records = run_batch(items, *backend, config.decoding, config.concurrency_limit);

    if (records_out.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(records_out.parent_path(), ec);
    }
    save_records(records, records_out);

    GenerateOutcome outcome;
    for (const auto& rec : records) {
        (rec.ok() ? outcome.ok : outcome.failed) += 1;
    }
    return outcome;
}

ParseOutcome cmd_parse(const std::filesystem::path& records_path, const FilterConfig& filters,
                       TypeScheme scheme, const std::filesystem::path& corpus_out,
                       const std::filesystem::path& rejections_out)
{
    (void)scheme; // diaries store raw survey codes; no scheme mapping happens here
    validate_filters(filters);
    const auto records = load_records(records_path);
    BuildResult built = build_corpus(records, filters, LocationTaxonomy::builtin());

    write_text_file(corpus_out, corpus_to_json(built.corpus));
    write_text_file(rejections_out, rejection_summary_to_json(built.rejections));

    ParseOutcome outcome;
    outcome.accepted = built.corpus.diaries.size();
    outcome.rejected = records.size() - outcome.accepted;
    return outcome;
}

EvalReport cmd_eval(const std::filesystem::path& actual_path,
                    const std::filesystem::path& generated_path,
                    const std::vector<std::filesystem::path>& reference_paths, TypeScheme scheme,
                    const std::filesystem::path& out_dir)
{
    const Corpus actual = load_named_corpus(actual_path);
    const Corpus generated = load_named_corpus(generated_path);
    std::vector<Corpus> references;
    references.reserve(reference_paths.size());
    for (const auto& path : reference_paths) {
        references.push_back(load_named_corpus(path));
    }

    EvalReport report =
        evaluate_corpora(actual, generated, references, LocationTaxonomy::builtin(), scheme);
    write_report_files(report, out_dir);
    return report;
}

Corpus sample_corpus(const Corpus& corpus, std::size_t n, std::uint64_t seed)
{
    if (corpus.diaries.size() < n) {
        throw InsufficientData("cannot sample " + std::to_string(n) + " diaries from " +
                               std::to_string(corpus.diaries.size()));
    }
    std::vector<std::size_t> index(corpus.diaries.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
        index[i] = i;
    }
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.bounded(index.size() - i));
        std::swap(index[i], index[j]);
    }

    Corpus out;
    out.region_id = corpus.region_id;
    out.source = corpus.source;
    out.diaries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.diaries.push_back(corpus.diaries[index[i]]);
    }
    return out;
}

PolComparison cmd_compare_pol(const std::filesystem::path& actual_path,
                              const std::filesystem::path& generated_path,
                              const std::filesystem::path& pol_path, std::uint64_t seed,
                              const std::filesystem::path& out_path)
{
    const Corpus actual = load_named_corpus(actual_path);
    Corpus generated = load_named_corpus(generated_path);
    Corpus pol = load_named_corpus(pol_path);

    // Match sizes: only the larger side is down-sampled.
    const std::size_t matched = std::min(generated.diaries.size(), pol.diaries.size());
    const Rng master(seed);
    if (generated.diaries.size() > matched) {
        generated = sample_corpus(generated, matched, master.derive(0, 3).seed());
    }
    if (pol.diaries.size() > matched) {
        pol = sample_corpus(pol, matched, master.derive(1, 3).seed());
    }

    PolComparison cmp;
    cmp.sample_size = matched;
    cmp.llm = evaluate_corpora(actual, generated, {}, LocationTaxonomy::builtin(),
                               TypeScheme::Six);
    cmp.pol = evaluate_corpora(actual, pol, {}, LocationTaxonomy::builtin(), TypeScheme::Six);

    write_text_file(out_path, pol_comparison_to_json_text(cmp));
    return cmp;
}

ClusterResult cmd_cluster(const std::vector<std::filesystem::path>& corpus_paths, std::size_t k,
                          TypeScheme scheme, const std::filesystem::path& out_path)
{
    std::vector<LabeledVector> vectors;
    vectors.reserve(corpus_paths.size());
    for (const auto& path : corpus_paths) {
        const Corpus corpus = load_named_corpus(path);
        const auto model = transition_model(corpus, LocationTaxonomy::builtin(), scheme, 1);
        std::string label = corpus.region_id.empty() ? path.stem().string() : corpus.region_id;
        vectors.push_back({std::move(label), flatten(model)});
    }

    ClusterResult result = ward_cluster(vectors, k);

    json merges = json::array();
    for (const auto& m : result.dendrogram.merges) {
        merges.push_back({{"cluster_a", m.cluster_a},
                          {"cluster_b", m.cluster_b},
                          {"height", m.height},
                          {"size", m.new_size}});
    }
    const json doc = {
        {"scheme", std::string(scheme_id(scheme))},
        {"k", k},
        {"labels", result.dendrogram.labels},
        {"merges", std::move(merges)},
        {"assignments", result.assignments},
    };
    write_text_file(out_path, doc.dump(2) + "\n");
    return result;
}

std::size_t cmd_export_finetune(const std::vector<std::filesystem::path>& corpus_paths,
                                std::size_t n, const std::vector<std::string>& exclude_regions,
                                std::uint64_t seed, const std::filesystem::path& out_path)
{
    std::vector<Corpus> corpora;
    corpora.reserve(corpus_paths.size());
    for (const auto& path : corpus_paths) {
        corpora.push_back(load_named_corpus(path));
    }

    const auto pairs = make_finetune_pairs(corpora, n, exclude_regions, seed);
    if (out_path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(out_path.parent_path(), ec);
    }
    save_finetune_jsonl(pairs, out_path);
    return pairs.size();
}

} // namespace mobilicast
