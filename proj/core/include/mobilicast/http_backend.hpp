#ifndef MOBILICAST_HTTP_BACKEND_HPP
#define MOBILICAST_HTTP_BACKEND_HPP

#include <string>

#include "mobilicast/backend.hpp"

namespace mobilicast
{

// Chat-completions-over-HTTP backend configuration. The request body is
//   { "model": ..., "messages": [{"role": "user", "content": <prompt>}],
//     "temperature": ..., "top_k": ...,        (omitted when unset)
//     "max_tokens": ... }
// and the completion is read from choices[0].message.content, falling back
// to choices[0].text. The bearer token is taken from the environment
// variable named by api_key_env; no Authorization header is sent when the
// variable is unset or empty.
struct HttpBackendConfig {
    std::string endpoint; // e.g. "http://localhost:8089/v1/chat/completions"
    std::string model;
    std::string api_key_env = "MOBILICAST_API_KEY";
    int max_attempts = 5;
    int initial_backoff_ms = 1000; // doubles (by backoff_factor) per retry
    double backoff_factor = 2.0;
    int timeout_sec = 120;

    bool operator==(const HttpBackendConfig&) const = default;
};

class HttpBackend : public TextGenerator
{
public:
    // Throws InvalidConfig on an unusable endpoint/retry policy.
    explicit HttpBackend(HttpBackendConfig config);

    // Retries on HTTP 429, HTTP 5xx and transport failures with exponential
    // backoff; all other failures are terminal on first sight. Throws
    // RateLimited / BackendUnavailable / MalformedResponse. The seed is
    // ignored (sampling happens service-side).
    GenerationResult generate(const std::string& prompt, const DecodingConfig& decoding,
                              std::uint64_t seed) override;

    std::string id() const override;

private:
    HttpBackendConfig m_config;
    std::string m_base; // scheme://host:port
    std::string m_path; // /v1/...
};

} // namespace mobilicast

#endif // MOBILICAST_HTTP_BACKEND_HPP
