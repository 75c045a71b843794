#include "mobilicast/http_backend.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <tuple>

#include "httplib.h"
#include "json.hpp"

#include "mobilicast/errors.hpp"

namespace mobilicast
{

namespace
{

// "http://host:port/some/path" -> {"http://host:port", "/some/path"}.
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint)
{
    const std::string scheme = "http://";
    if (endpoint.rfind("https://", 0) == 0) {
        throw InvalidConfig("https endpoints are not supported by this build; use http");
    }
    if (endpoint.rfind(scheme, 0) != 0) {
        throw InvalidConfig("endpoint '" + endpoint + "' must start with http://");
    }
    const std::size_t path_start = endpoint.find('/', scheme.size());
    if (path_start == std::string::npos) {
        return {endpoint, "/"};
    }
    if (path_start == scheme.size()) {
        throw InvalidConfig("endpoint '" + endpoint + "' lacks a host");
    }
    return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

std::string extract_completion(const std::string& body, int attempts)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(body);
    }
    catch (const nlohmann::json::exception& e) {
        throw MalformedResponse(std::string("response is not JSON: ") + e.what(), attempts);
    }
    if (!j.contains("choices") || !j["choices"].is_array() || j["choices"].empty()) {
        throw MalformedResponse("response lacks a non-empty choices array", attempts);
    }
    const auto& choice = j["choices"][0];
    if (choice.contains("message") && choice["message"].contains("content") &&
        choice["message"]["content"].is_string()) {
        return choice["message"]["content"].get<std::string>();
    }
    if (choice.contains("text") && choice["text"].is_string()) {
        return choice["text"].get<std::string>();
    }
    throw MalformedResponse("choices[0] carries neither message.content nor text", attempts);
}

} // namespace

HttpBackend::HttpBackend(HttpBackendConfig config)
    : m_config(std::move(config))
{
    if (m_config.model.empty()) {
        throw InvalidConfig("http backend needs a model id");
    }
    if (m_config.max_attempts < 1) {
        throw InvalidConfig("max_attempts must be >= 1");
    }
    if (m_config.initial_backoff_ms < 0 || m_config.backoff_factor < 1.0) {
        throw InvalidConfig("backoff must be non-negative with factor >= 1");
    }
    std::tie(m_base, m_path) = split_endpoint(m_config.endpoint);
}

std::string HttpBackend::id() const
{
    return "http:" + m_config.model;
}

GenerationResult HttpBackend::generate(const std::string& prompt, const DecodingConfig& decoding,
                                       std::uint64_t seed)
{
    (void)seed; // sampling randomness lives service-side

    nlohmann::json body = {
        {"model", m_config.model},
        {"messages", nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
        {"temperature", decoding.temperature},
        {"max_tokens", decoding.max_tokens},
    };
    if (decoding.top_k) {
        body["top_k"] = *decoding.top_k;
    }
    const std::string payload = body.dump();

    httplib::Headers headers;
    if (const char* key = std::getenv(m_config.api_key_env.c_str()); key != nullptr && key[0] != '\0') {
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }

    const auto started = std::chrono::steady_clock::now();
    const auto elapsed_ms = [&started]() {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                     started)
            .count();
    };

    std::string last_failure;
    for (int attempt = 1; attempt <= m_config.max_attempts; ++attempt) {
        if (attempt > 1) {
            const double factor = std::pow(m_config.backoff_factor, attempt - 2);
            const auto wait = std::chrono::milliseconds(
                static_cast<std::int64_t>(m_config.initial_backoff_ms * factor));
            std::this_thread::sleep_for(wait);
        }

        httplib::Client client(m_base);
        client.set_connection_timeout(m_config.timeout_sec, 0);
        client.set_read_timeout(m_config.timeout_sec, 0);
        client.set_write_timeout(m_config.timeout_sec, 0);

        httplib::Result res = client.Post(m_path, headers, payload, "application/json");
        if (!res) {
            last_failure = "transport error: " + httplib::to_string(res.error());
            continue; // retriable
        }
        if (res->status == 429) {
            last_failure = "rate limited (429)";
            if (attempt == m_config.max_attempts) {
                throw RateLimited(m_config.endpoint + ": still rate limited after " +
                                      std::to_string(attempt) + " attempts",
                                  attempt);
            }
            continue;
        }
        if (res->status >= 500) {
            last_failure = "server error (" + std::to_string(res->status) + ")";
            continue; // retriable
        }
        if (res->status != 200) {
            throw BackendUnavailable(m_config.endpoint + " answered " + std::to_string(res->status) +
                                         ": " + res->body.substr(0, 200),
                                     attempt);
        }

        GenerationResult out;
        out.text = extract_completion(res->body, attempt);
        out.attempt_count = attempt;
        out.latency_ms = elapsed_ms();
        return out;
    }

    const int attempts = m_config.max_attempts;
    if (last_failure.rfind("rate limited", 0) == 0) {
        throw RateLimited(m_config.endpoint + ": " + last_failure + " after " + std::to_string(attempts) +
                              " attempts",
                          attempts);
    }
    throw BackendUnavailable(m_config.endpoint + ": " + last_failure + " after " +
                                 std::to_string(attempts) + " attempts",
                             attempts);
}

} // namespace mobilicast
