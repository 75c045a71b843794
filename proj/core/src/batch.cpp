#include "mobilicast/batch.hpp"

#include <atomic>
#include <thread>

#include "mobilicast/errors.hpp"
#include "mobilicast/prompt.hpp"
#include "mobilicast/rng.hpp"

namespace mobilicast
{

std::vector<BatchItem> make_batch_items(const std::vector<SurveyAssignment>& assignments,
                                        std::uint64_t master_seed, const std::string& template_text)
{
    const Rng master(master_seed);
    std::vector<BatchItem> items;
    items.reserve(assignments.size());
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        BatchItem item;
        item.assignment = assignments[i];
        item.prompt = render_prompt(assignments[i], template_text);
        item.seed = master.derive(static_cast<std::uint64_t>(i)).seed();
        items.push_back(std::move(item));
    }
    return items;
}

std::vector<GenerationRecord> run_batch(const std::vector<BatchItem>& items, TextGenerator& backend,
                                        const DecodingConfig& decoding, int concurrency_limit)
{
    if (concurrency_limit < 1) {
        throw InvalidConfig("concurrency_limit must be >= 1");
    }
    validate_decoding(decoding);

    std::vector<GenerationRecord> results(items.size());
    std::atomic<std::size_t> next{0};

    const auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size()) {
                return;
            }
            const BatchItem& item = items[i];
            GenerationRecord rec;
            rec.assignment = item.assignment;
            rec.prompt = item.prompt;
            rec.backend_id = backend.id();
            try {
                GenerationResult r = backend.generate(item.prompt, decoding, item.seed);
                rec.raw_completion = std::move(r.text);
                rec.attempt_count = r.attempt_count;
                rec.latency_ms = r.latency_ms;
            }
            catch (const BackendError& e) {
                rec.error = e.kind();
                rec.attempt_count = e.attempts();
            }
            catch (const Error& e) {
                rec.error = e.kind();
            }
            catch (const std::exception&) {
                rec.error = "Error";
            }
            results[i] = std::move(rec);
        }
    };

    const std::size_t n_threads =
        std::min(static_cast<std::size_t>(concurrency_limit), std::max<std::size_t>(items.size(), 1));
    if (n_threads <= 1) {
        worker();
    }
    else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    return results;
}

} // namespace mobilicast
