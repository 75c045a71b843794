#ifndef MOBILICAST_BACKEND_HPP
#define MOBILICAST_BACKEND_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "mobilicast/persona_gen.hpp"

namespace mobilicast
{

// Sampling parameters forwarded to the text generator.
struct DecodingConfig {
    double temperature = 1.0;
    std::optional<int> top_k = 50; // nullopt: let the service default
    int max_tokens = 1024;

    bool operator==(const DecodingConfig&) const = default;
};

// Throws InvalidConfig on non-finite/negative temperature, top_k < 1 or
// max_tokens < 1.
void validate_decoding(const DecodingConfig& d);

struct GenerationResult {
    std::string text;
    int attempt_count = 1; // requests made, including retries
    std::int64_t latency_ms = 0;
};

// One text-completion service. Implementations must be safe to call from
// multiple threads concurrently.
class TextGenerator
{
public:
    virtual ~TextGenerator() = default;

    // Produces a completion for `prompt`. `seed` individualizes stochastic
    // local backends; remote services ignore it. Throws a BackendError
    // subclass when generation fails terminally (after any retries).
    virtual GenerationResult generate(const std::string& prompt, const DecodingConfig& decoding,
                                      std::uint64_t seed) = 0;

    // Stable identifier stored in batch records, e.g. "mock" or the model id.
    virtual std::string id() const = 0;
};

// Everything known about one generation attempt in a batch: the assignment,
// the exact prompt, and either the raw completion or the error class that
// terminated it.
struct GenerationRecord {
    SurveyAssignment assignment;
    std::string prompt;
    std::string raw_completion; // empty when error is set
    std::string backend_id;
    std::int64_t latency_ms = 0;
    int attempt_count = 1;
    std::optional<std::string> error; // error kind, e.g. "RateLimited"

    bool ok() const
    {
        return !error.has_value();
    }

    bool operator==(const GenerationRecord&) const = default;
};

} // namespace mobilicast

#endif // MOBILICAST_BACKEND_HPP
