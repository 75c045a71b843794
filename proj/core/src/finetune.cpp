#include "mobilicast/finetune.hpp"

#include <algorithm>
#include <fstream>
#include <system_error>
#include <utility>

#include "json.hpp"

#include "mobilicast/diary_render.hpp"
#include "mobilicast/errors.hpp"
#include "mobilicast/prompt.hpp"
#include "mobilicast/rng.hpp"

namespace mobilicast
{

std::vector<FinetunePair> make_finetune_pairs(const std::vector<Corpus>& corpora, std::size_t n,
                                              const std::vector<std::string>& exclude_regions,
                                              std::uint64_t seed)
{
    return make_finetune_pairs(corpora, n, exclude_regions, seed, default_prompt_template());
}

std::vector<FinetunePair> make_finetune_pairs(const std::vector<Corpus>& corpora, std::size_t n,
                                              const std::vector<std::string>& exclude_regions,
                                              std::uint64_t seed,
                                              const std::string& template_text)
{
    const auto excluded = [&exclude_regions](const std::string& region) {
        return std::find(exclude_regions.begin(), exclude_regions.end(), region) !=
               exclude_regions.end();
    };

    std::vector<const TravelDiary*> pool;
    for (const auto& corpus : corpora) {
        if (excluded(corpus.region_id)) {
            continue;
        }
        for (const auto& diary : corpus.diaries) {
            pool.push_back(&diary);
        }
    }
    if (pool.size() < n) {
        throw InsufficientData("need " + std::to_string(n) + " diaries after exclusion, have " +
                               std::to_string(pool.size()));
    }

    // Partial Fisher-Yates: the first n slots become a uniform sample without
    // replacement.
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.bounded(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }

    std::vector<FinetunePair> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const TravelDiary& diary = *pool[i];
        const PersonaMeta meta = diary.persona ? *diary.persona : PersonaMeta{};
        pairs.push_back({render_prompt(meta, diary.survey_date, template_text),
                         render_diary_table(diary.entries)});
    }
    return pairs;
}

std::string finetune_pairs_to_jsonl(const std::vector<FinetunePair>& pairs)
{
    std::string out;
    for (const auto& pair : pairs) {
        const nlohmann::json j = {{"prompt", pair.prompt}, {"completion", pair.completion}};
        out += j.dump();
        out += '\n';
    }
    return out;
}

void save_finetune_jsonl(const std::vector<FinetunePair>& pairs, const std::filesystem::path& path)
{
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path);
    if (!out) {
        throw IoFailure("cannot write " + path.string());
    }
    out << finetune_pairs_to_jsonl(pairs);
    if (!out) {
        throw IoFailure("short write to " + path.string());
    }
}

} // namespace mobilicast
