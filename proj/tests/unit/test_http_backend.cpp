// HTTP backend against a local stub service: request shape, bearer-token
// handling, completion extraction, and the retry policy (429/5xx/transport
// retried with backoff, everything else terminal on first sight).

#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"

#include "mobilicast/backend.hpp"
#include "mobilicast/batch.hpp"
#include "mobilicast/errors.hpp"
#include "mobilicast/http_backend.hpp"

namespace
{

using nlohmann::json;

// One scripted response; after the script runs out the fallback repeats.
struct Step {
    int status = 200;
    std::string body;
};

std::string ok_body(const std::string& text)
{
    return json{{"choices", json::array({{{"message", {{"content", text}}}}})}}.dump();
}

// Local chat-completions stub that records every request it serves.
class StubService
{
public:
    explicit StubService(std::vector<Step> script, Step fallback = {200, ok_body("fallback")})
        : m_script(std::move(script))
        , m_fallback(std::move(fallback))
    {
        m_server.Post("/v1/chat/completions",
                      [this](const httplib::Request& req, httplib::Response& res) {
                          Step step;
                          {
                              std::lock_guard<std::mutex> lock(m_mutex);
                              m_requests.push_back(req);
                              const std::size_t n = m_requests.size() - 1;
                              step = n < m_script.size() ? m_script[n] : m_fallback;
                          }
                          res.status = step.status;
                          res.set_content(step.body, "application/json");
                      });
        m_port = m_server.bind_to_any_port("127.0.0.1");
        REQUIRE(m_port > 0);
        m_thread = std::thread([this] { m_server.listen_after_bind(); });
        m_server.wait_until_ready();
    }

    ~StubService()
    {
        m_server.stop();
        m_thread.join();
    }

    std::string endpoint() const
    {
        return "http://127.0.0.1:" + std::to_string(m_port) + "/v1/chat/completions";
    }

    std::size_t request_count()
    {
        std::lock_guard<std::mutex> lock(m_mutex);
        return m_requests.size();
    }

    httplib::Request request(std::size_t i)
    {
        std::lock_guard<std::mutex> lock(m_mutex);
        REQUIRE(i < m_requests.size());
        return m_requests[i];
    }

private:
    httplib::Server m_server;
    std::thread m_thread;
    int m_port = 0;
    std::mutex m_mutex;
    std::vector<httplib::Request> m_requests;
    std::vector<Step> m_script;
    Step m_fallback;
};

// Backend wired to the stub with millisecond backoff so retries are instant.
mobilicast::HttpBackendConfig stub_config(const StubService& stub)
{
    mobilicast::HttpBackendConfig config;
    config.endpoint = stub.endpoint();
    config.model = "diaryist";
    config.initial_backoff_ms = 1;
    return config;
}

// Keeps the key variable out of the environment for the enclosing scope.
class ScopedUnsetEnv
{
public:
    explicit ScopedUnsetEnv(const char* name)
        : m_name(name)
    {
        ::unsetenv(name);
    }

    ~ScopedUnsetEnv()
    {
        ::unsetenv(m_name);
    }

private:
    const char* m_name;
};

} // namespace

TEST_CASE("a successful call extracts the completion and sends the documented body")
{
    ScopedUnsetEnv no_key("MOBILICAST_API_KEY");
    StubService stub({{200, ok_body("| table |")}});
    mobilicast::HttpBackend backend(stub_config(stub));

    mobilicast::DecodingConfig decoding;
    decoding.temperature = 0.25;
    decoding.top_k = 40;
    decoding.max_tokens = 99;
    const auto result = backend.generate("write a diary", decoding, 7);

    CHECK(result.text == "| table |");
    CHECK(result.attempt_count == 1);
    REQUIRE(stub.request_count() == 1);

    const auto req = stub.request(0);
    CHECK(req.path == "/v1/chat/completions");
    CHECK(req.get_header_value("Content-Type") == "application/json");
    CHECK_FALSE(req.has_header("Authorization"));

    const auto body = json::parse(req.body);
    CHECK(body.at("model") == "diaryist");
    REQUIRE(body.at("messages").size() == 1);
    CHECK(body.at("messages")[0].at("role") == "user");
    CHECK(body.at("messages")[0].at("content") == "write a diary");
    CHECK(body.at("temperature") == 0.25);
    CHECK(body.at("top_k") == 40);
    CHECK(body.at("max_tokens") == 99);
}

TEST_CASE("an unset top_k is omitted from the request body")
{
    ScopedUnsetEnv no_key("MOBILICAST_API_KEY");
    StubService stub({{200, ok_body("t")}});
    mobilicast::HttpBackend backend(stub_config(stub));

    mobilicast::DecodingConfig decoding;
    decoding.top_k.reset();
    backend.generate("p", decoding, 0);

    const auto body = json::parse(stub.request(0).body);
    CHECK_FALSE(body.contains("top_k"));
    CHECK(body.contains("temperature"));
    CHECK(body.contains("max_tokens"));
}

TEST_CASE("completion extraction prefers message.content and falls back to text")
{
    ScopedUnsetEnv no_key("MOBILICAST_API_KEY");

    SUBCASE("legacy text field")
    {
        StubService stub({{200, json{{"choices", json::array({{{"text", "legacy"}}})}}.dump()}});
        mobilicast::HttpBackend backend(stub_config(stub));
        CHECK(backend.generate("p", {}, 0).text == "legacy");
    }
    SUBCASE("message.content wins when both are present")
    {
        json choice = {{"message", {{"content", "modern"}}}, {"text", "legacy"}};
        StubService stub({{200, json{{"choices", json::array({choice})}}.dump()}});
        mobilicast::HttpBackend backend(stub_config(stub));
        CHECK(backend.generate("p", {}, 0).text == "modern");
    }
}

TEST_CASE("rate limiting retries with backoff and succeeds when the limit clears")
{
    ScopedUnsetEnv no_key("MOBILICAST_API_KEY");
    StubService stub({{429, "{}"}, {429, "{}"}, {200, ok_body("third time lucky")}});
    mobilicast::HttpBackend backend(stub_config(stub));

    const auto result = backend.generate("p", {}, 0);
    CHECK(result.text == "third time lucky");
    CHECK(result.attempt_count == 3);
    CHECK(stub.request_count() == 3);
}

TEST_CASE("persistent rate limiting exhausts the attempt budget")
{
    ScopedUnsetEnv no_key("MOBILICAST_API_KEY");
    StubService stub({}, {429, "{}"});
    mobilicast::HttpBackend backend(stub_config(stub));

    try {
        backend.generate("p", {}, 0);
        FAIL("expected RateLimited");
    }
    catch (const mobilicast::RateLimited& e) {
        CHECK(e.attempts() == 5);
    }
    CHECK(stub.request_count() == 5);
}

TEST_CASE("server errors are retried, then reported as unavailability")
{
    ScopedUnsetEnv no_key("MOBILICAST_API_KEY");

    SUBCASE("a transient 500 heals")
    {
        StubService stub({{500, "oops"}, {200, ok_body("healed")}});
        mobilicast::HttpBackend backend(stub_config(stub));
        const auto result = backend.generate("p", {}, 0);
        CHECK(result.text == "healed");
        CHECK(result.attempt_count == 2);
    }
    SUBCASE("a persistent 503 exhausts the budget")
    {
        StubService stub({}, {503, "down"});
        mobilicast::HttpBackend backend(stub_config(stub));
        try {
            backend.generate("p", {}, 0);
            FAIL("expected BackendUnavailable");
        }
        catch (const mobilicast::BackendUnavailable& e) {
            CHECK(e.attempts() == 5);
        }
        CHECK(stub.request_count() == 5);
    }
}

TEST_CASE("client errors are terminal on the first attempt")
{
    ScopedUnsetEnv no_key("MOBILICAST_API_KEY");
    StubService stub({}, {400, R"({"error": "bad request"})"});
    mobilicast::HttpBackend backend(stub_config(stub));

    try {
        backend.generate("p", {}, 0);
        FAIL("expected BackendUnavailable");
    }
    catch (const mobilicast::BackendUnavailable& e) {
        CHECK(e.attempts() == 1);
    }
    CHECK(stub.request_count() == 1); // no retry burned on a non-retriable status
}

TEST_CASE("malformed success bodies fail immediately without retries")
{
    ScopedUnsetEnv no_key("MOBILICAST_API_KEY");
    const std::vector<std::string> bodies = {
        "definitely not json",
        "{}",
        R"({"choices": []})",
        R"({"choices": [{"message": {}}]})",
        R"({"choices": [{"message": {"content": 42}}]})",
    };
    for (const auto& body : bodies) {
        CAPTURE(body);
        StubService stub({}, {200, body});
        mobilicast::HttpBackend backend(stub_config(stub));
        try {
            backend.generate("p", {}, 0);
            FAIL("expected MalformedResponse");
        }
        catch (const mobilicast::MalformedResponse& e) {
            CHECK(e.attempts() == 1);
        }
        CHECK(stub.request_count() == 1);
    }
}

TEST_CASE("the bearer token comes from the configured environment variable")
{
    ScopedUnsetEnv no_key("MOBILICAST_API_KEY");

    SUBCASE("set key, default variable")
    {
        ::setenv("MOBILICAST_API_KEY", "sk-test-123", 1);
        StubService stub({{200, ok_body("t")}});
        mobilicast::HttpBackend backend(stub_config(stub));
        backend.generate("p", {}, 0);
        CHECK(stub.request(0).get_header_value("Authorization") == "Bearer sk-test-123");
    }
    SUBCASE("an empty value sends no header")
    {
        ::setenv("MOBILICAST_API_KEY", "", 1);
        StubService stub({{200, ok_body("t")}});
        mobilicast::HttpBackend backend(stub_config(stub));
        backend.generate("p", {}, 0);
        CHECK_FALSE(stub.request(0).has_header("Authorization"));
    }
    SUBCASE("the variable name is configurable")
    {
        ScopedUnsetEnv alt_guard("ALT_DIARY_KEY");
        ::setenv("ALT_DIARY_KEY", "sk-alt", 1);
        StubService stub({{200, ok_body("t")}});
        auto config = stub_config(stub);
        config.api_key_env = "ALT_DIARY_KEY";
        mobilicast::HttpBackend backend(config);
        backend.generate("p", {}, 0);
        CHECK(stub.request(0).get_header_value("Authorization") == "Bearer sk-alt");
    }
}

TEST_CASE("unusable endpoints and retry policies are rejected at construction")
{
    mobilicast::HttpBackendConfig config;
    config.model = "m";

    SUBCASE("https is not supported by this build")
    {
        config.endpoint = "https://api.example.com/v1/chat/completions";
        CHECK_THROWS_WITH_AS(mobilicast::HttpBackend{config}, doctest::Contains("https"),
                             mobilicast::InvalidConfig);
    }
    SUBCASE("non-http schemes are rejected")
    {
        config.endpoint = "ftp://example.com/v1";
        CHECK_THROWS_AS(mobilicast::HttpBackend{config}, mobilicast::InvalidConfig);
    }
    SUBCASE("a host is required")
    {
        config.endpoint = "http:///v1/chat/completions";
        CHECK_THROWS_AS(mobilicast::HttpBackend{config}, mobilicast::InvalidConfig);
    }
    SUBCASE("a bare-host endpoint defaults its path")
    {
        config.endpoint = "http://localhost:9";
        CHECK_NOTHROW(mobilicast::HttpBackend{config});
    }
    SUBCASE("the model id is mandatory")
    {
        config.endpoint = "http://localhost:9/v1";
        config.model.clear();
        CHECK_THROWS_AS(mobilicast::HttpBackend{config}, mobilicast::InvalidConfig);
    }
    SUBCASE("retry policy bounds")
    {
        config.endpoint = "http://localhost:9/v1";
        auto a = config;
        a.max_attempts = 0;
        CHECK_THROWS_AS(mobilicast::HttpBackend{a}, mobilicast::InvalidConfig);
        auto b = config;
        b.initial_backoff_ms = -1;
        CHECK_THROWS_AS(mobilicast::HttpBackend{b}, mobilicast::InvalidConfig);
        auto c = config;
        c.backoff_factor = 0.5;
        CHECK_THROWS_AS(mobilicast::HttpBackend{c}, mobilicast::InvalidConfig);
    }
}

TEST_CASE("the backend id names the model")
{
    mobilicast::HttpBackendConfig config;
    config.endpoint = "http://localhost:9/v1/chat/completions";
    config.model = "diaryist-large";
    CHECK(mobilicast::HttpBackend(config).id() == "http:diaryist-large");
}

TEST_CASE("transport failures retry and end as unavailability")
{
    // Nothing listens here: connecting fails before any HTTP exchange.
    mobilicast::HttpBackendConfig config;
    config.endpoint = "http://127.0.0.1:9/v1/chat/completions";
    config.model = "m";
    config.max_attempts = 2;
    config.initial_backoff_ms = 1;
    config.timeout_sec = 2;
    mobilicast::HttpBackend backend(config);

    try {
        backend.generate("p", {}, 0);
        FAIL("expected BackendUnavailable");
    }
    catch (const mobilicast::BackendUnavailable& e) {
        CHECK(e.attempts() == 2);
        CHECK(std::string(e.what()).find("transport") != std::string::npos);
    }
}

TEST_CASE("a batch over the http backend preserves order and survives item failures")
{
    ScopedUnsetEnv no_key("MOBILICAST_API_KEY");
    // Sequential workers make the script position equal the item index.
    StubService stub({{200, ok_body("diary zero")},
                      {400, "no"},
                      {200, ok_body("diary two")}});
    mobilicast::HttpBackend backend(stub_config(stub));

    std::vector<mobilicast::BatchItem> items(3);
    for (std::size_t i = 0; i < items.size(); ++i) {
        items[i].prompt = "prompt " + std::to_string(i);
        items[i].seed = i;
    }
    const auto records = mobilicast::run_batch(items, backend, {}, 1);

    REQUIRE(records.size() == 3);
    CHECK(records[0].ok());
    CHECK(records[0].raw_completion == "diary zero");
    CHECK_FALSE(records[1].ok());
    CHECK(records[1].error == "BackendUnavailable");
    CHECK(records[1].attempt_count == 1);
    CHECK(records[2].ok());
    CHECK(records[2].raw_completion == "diary two");
    CHECK(stub.request_count() == 3);
}
