#ifndef MOBILICAST_FINETUNE_HPP
#define MOBILICAST_FINETUNE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mobilicast/types.hpp"

namespace mobilicast
{

// One training example: the rendered generation prompt for the diary's
// persona metadata and survey date, and the diary's markdown table as the
// target completion.
struct FinetunePair {
    std::string prompt;
    std::string completion;

    bool operator==(const FinetunePair&) const = default;
};

// Pools the diaries of every corpus whose region is not excluded, samples n
// of them uniformly without replacement (deterministic for a given seed and
// input order), and renders one pair per sampled diary. Diaries without
// persona metadata still export; their persona paragraph just carries fewer
// clauses. Throws InsufficientData when fewer than n diaries survive the
// exclusion.
std::vector<FinetunePair> make_finetune_pairs(const std::vector<Corpus>& corpora, std::size_t n,
                                              const std::vector<std::string>& exclude_regions,
                                              std::uint64_t seed);

// Same, with a caller-supplied prompt template.
std::vector<FinetunePair> make_finetune_pairs(const std::vector<Corpus>& corpora, std::size_t n,
                                              const std::vector<std::string>& exclude_regions,
                                              std::uint64_t seed,
                                              const std::string& template_text);

// JSON Lines, one {"prompt": ..., "completion": ...} object per line.
void save_finetune_jsonl(const std::vector<FinetunePair>& pairs,
                         const std::filesystem::path& path);

std::string finetune_pairs_to_jsonl(const std::vector<FinetunePair>& pairs);

} // namespace mobilicast

#endif
