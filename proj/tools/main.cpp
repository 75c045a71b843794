// mobilicast: synthesize travel-survey diaries with a pluggable text
// backend, parse them into corpora, and compare corpora statistically.
//
// Exit codes: 0 success, 1 validation/usage error, 2 generation batch with
// failed items, 3 I/O failure.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mobilicast/commands.hpp"
#include "mobilicast/errors.hpp"

namespace
{

// Flags shared across subcommands; each subcommand owns one instance so
// CLI11 bindings never collide.
struct CommonFlags {
    std::string config_path;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::string scheme;
    std::string out;
    std::vector<std::string> exclude_regions;

    CLI::Option* seed_opt = nullptr;
    CLI::Option* count_opt = nullptr;
    CLI::Option* scheme_opt = nullptr;
};

void add_common_flags(CLI::App* sub, CommonFlags& f, bool config_required)
{
    auto* config = sub->add_option("--config", f.config_path, "JSON run-config file");
    if (config_required) {
        config->required();
    }
    f.seed_opt = sub->add_option("--seed", f.seed, "seed override");
    f.count_opt = sub->add_option("--count", f.count, "count override");
    f.scheme_opt = sub->add_option("--scheme", f.scheme, "type scheme: type11 or type6");
    sub->add_option("--out", f.out, "output path")->required();
    sub->add_option("--exclude-region", f.exclude_regions, "region id to exclude (repeatable)");
}

// Config file merged with command-line overrides (flags win).
mobilicast::RunConfig effective_config(const CommonFlags& f)
{
    mobilicast::RunConfig config;
    if (!f.config_path.empty()) {
        config = mobilicast::load_run_config(f.config_path);
    }
    if (f.seed_opt->count() > 0) {
        config.seed = f.seed;
        config.has_seed = true;
    }
    if (f.count_opt->count() > 0) {
        config.count = f.count;
    }
    if (f.scheme_opt->count() > 0) {
        config.scheme = mobilicast::parse_scheme(f.scheme);
    }
    return config;
}

std::uint64_t require_seed(const mobilicast::RunConfig& config)
{
    if (!config.has_seed) {
        throw mobilicast::InvalidConfig("a seed is required (--seed or config file)");
    }
    return config.seed;
}

std::vector<std::filesystem::path> to_paths(const std::vector<std::string>& texts)
{
    return {texts.begin(), texts.end()};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"travel-diary synthesis and evaluation toolkit"};
    app.require_subcommand(1);

    auto* generate = app.add_subcommand("generate", "run a diary generation batch");
    CommonFlags generate_flags;
    add_common_flags(generate, generate_flags, /*config_required=*/true);

    auto* parse = app.add_subcommand("parse", "turn raw generation records into a corpus");
    CommonFlags parse_flags;
    add_common_flags(parse, parse_flags, /*config_required=*/false);
    std::string records_path;
    std::string rejections_path;
    parse->add_option("--records", records_path, "generation records JSONL")->required();
    parse->add_option("--rejections", rejections_path,
                      "rejection summary path (default: <out>.rejections.json)");

    auto* eval = app.add_subcommand("eval", "compare a generated corpus against an actual one");
    CommonFlags eval_flags;
    add_common_flags(eval, eval_flags, /*config_required=*/false);
    std::string actual_path;
    std::string generated_path;
    std::vector<std::string> reference_paths;
    eval->add_option("--actual", actual_path, "actual corpus JSON")->required();
    eval->add_option("--generated", generated_path, "generated corpus JSON")->required();
    eval->add_option("--reference", reference_paths,
                     "additional actual corpora widening the chain reference set (repeatable)");

    auto* compare_pol =
        app.add_subcommand("compare-pol", "evaluate generated and simulation-baseline corpora "
                                          "against the same actual corpus at matched sizes");
    CommonFlags pol_flags;
    add_common_flags(compare_pol, pol_flags, /*config_required=*/false);
    std::string pol_actual_path;
    std::string pol_generated_path;
    std::string pol_path;
    compare_pol->add_option("--actual", pol_actual_path, "actual corpus JSON")->required();
    compare_pol->add_option("--generated", pol_generated_path, "generated corpus JSON")->required();
    compare_pol->add_option("--pol", pol_path, "simulation baseline corpus JSON")->required();

    auto* cluster = app.add_subcommand("cluster", "Ward-cluster corpora by transition behavior");
    CommonFlags cluster_flags;
    add_common_flags(cluster, cluster_flags, /*config_required=*/false);
    std::vector<std::string> cluster_inputs;
    std::size_t cluster_k = 0;
    cluster->add_option("--inputs", cluster_inputs, "corpus JSON files (>= 2)")->required();
    cluster->add_option("--k", cluster_k, "number of clusters")->required();

    auto* export_finetune =
        app.add_subcommand("export-finetune", "sample diaries into prompt/completion pairs");
    CommonFlags finetune_flags;
    add_common_flags(export_finetune, finetune_flags, /*config_required=*/false);
    std::vector<std::string> finetune_inputs;
    export_finetune->add_option("--inputs", finetune_inputs, "corpus JSON files")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (generate->parsed()) {
            const auto config = effective_config(generate_flags);
            const auto outcome = mobilicast::cmd_generate(config, generate_flags.out);
            std::printf("wrote %zu records to %s (%zu failed)\n", outcome.ok + outcome.failed,
                        generate_flags.out.c_str(), outcome.failed);
            return outcome.failed > 0 ? 2 : 0;
        }
        if (parse->parsed()) {
            const auto config = effective_config(parse_flags);
            std::filesystem::path rejections = rejections_path;
            if (rejections.empty()) {
                rejections = parse_flags.out;
                rejections.replace_extension();
                rejections += ".rejections.json";
            }
            const auto outcome = mobilicast::cmd_parse(records_path, config.filters, config.scheme,
                                                       parse_flags.out, rejections);
            std::printf("accepted %zu diaries, rejected %zu -> %s, %s\n", outcome.accepted,
                        outcome.rejected, parse_flags.out.c_str(), rejections.string().c_str());
            return 0;
        }
        if (eval->parsed()) {
            const auto config = effective_config(eval_flags);
            mobilicast::cmd_eval(actual_path, generated_path, to_paths(reference_paths),
                                 config.scheme, eval_flags.out);
            std::printf("report written to %s\n", eval_flags.out.c_str());
            return 0;
        }
        if (compare_pol->parsed()) {
            const auto config = effective_config(pol_flags);
            const auto cmp = mobilicast::cmd_compare_pol(pol_actual_path, pol_generated_path,
                                                         pol_path, require_seed(config),
                                                         pol_flags.out);
            std::printf("comparison written to %s (matched sample size %zu)\n",
                        pol_flags.out.c_str(), cmp.sample_size);
            return 0;
        }
        if (cluster->parsed()) {
            const auto config = effective_config(cluster_flags);
            const auto result = mobilicast::cmd_cluster(to_paths(cluster_inputs), cluster_k,
                                                        config.scheme, cluster_flags.out);
            for (std::size_t i = 0; i < result.dendrogram.labels.size(); ++i) {
                std::printf("%s -> cluster %d\n", result.dendrogram.labels[i].c_str(),
                            result.assignments[i]);
            }
            std::printf("dendrogram written to %s\n", cluster_flags.out.c_str());
            return 0;
        }
        if (export_finetune->parsed()) {
            const auto config = effective_config(finetune_flags);
            if (config.count < 1) {
                throw mobilicast::InvalidConfig(
                    "a sample size is required (--count or config file)");
            }
            const std::size_t n = mobilicast::cmd_export_finetune(
                to_paths(finetune_inputs), config.count, finetune_flags.exclude_regions,
                require_seed(config), finetune_flags.out);
            std::printf("exported %zu pairs to %s\n", n, finetune_flags.out.c_str());
            return 0;
        }
    }
    catch (const mobilicast::IoFailure& e) {
        std::fprintf(stderr, "error [%s]: %s\n", e.kind().c_str(), e.what());
        return 3;
    }
    catch (const mobilicast::Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", e.kind().c_str(), e.what());
        return 1;
    }
    catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
