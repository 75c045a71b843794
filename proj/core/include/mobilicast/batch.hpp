#ifndef MOBILICAST_BATCH_HPP
#define MOBILICAST_BATCH_HPP

#include <cstdint>
#include <vector>

#include "mobilicast/backend.hpp"

namespace mobilicast
{

// One unit of batch work: the assignment, its rendered prompt and the
// backend seed derived for it.
struct BatchItem {
    SurveyAssignment assignment;
    std::string prompt;
    std::uint64_t seed = 0;
};

// Renders prompts and derives one independent seed per assignment from
// `master_seed`. Seeds depend only on (master_seed, index), so a batch is
// reproducible regardless of how it is later scheduled.
std::vector<BatchItem> make_batch_items(const std::vector<SurveyAssignment>& assignments,
                                        std::uint64_t master_seed, const std::string& template_text);

// Runs every item to completion on up to `concurrency_limit` worker threads.
// The result vector is index-aligned with the input: item i's record is
// results[i] no matter which thread ran it or when it finished. A failing
// item never aborts the batch; its record carries the error kind and attempt
// count instead of a completion.
std::vector<GenerationRecord> run_batch(const std::vector<BatchItem>& items, TextGenerator& backend,
                                        const DecodingConfig& decoding, int concurrency_limit);

} // namespace mobilicast

#endif // MOBILICAST_BATCH_HPP
