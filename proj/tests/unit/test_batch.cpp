#include "doctest.h"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "mobilicast/batch.hpp"
#include "mobilicast/errors.hpp"
#include "mobilicast/persona_gen.hpp"

using mobilicast::BatchItem;
using mobilicast::DecodingConfig;
using mobilicast::GenerationResult;
using mobilicast::SurveyAssignment;

namespace
{

std::vector<SurveyAssignment> numbered_assignments(std::size_t n)
{
    std::vector<SurveyAssignment> out;
    for (std::size_t i = 0; i < n; ++i) {
        mobilicast::Persona p;
        p.sex = "female";
        p.age = 30;
        p.city_name = "City-" + std::to_string(i); // make prompts distinguishable
        out.push_back(mobilicast::make_assignment(p, mobilicast::Date{2016, 5, 5}));
    }
    return out;
}

// Echoes the prompt back after a thread-scheduling wobble, so order bugs
// would actually surface under concurrency.
class EchoBackend : public mobilicast::TextGenerator
{
public:
    GenerationResult generate(const std::string& prompt, const DecodingConfig&, std::uint64_t seed) override
    {
        m_calls.fetch_add(1);
        std::this_thread::sleep_for(std::chrono::microseconds(50 * (seed % 7)));
        GenerationResult r;
        r.text = "echo: " + prompt + " [seed " + std::to_string(seed) + "]";
        r.latency_ms = 0;
        return r;
    }

    std::string id() const override
    {
        return "echo";
    }

    int calls() const
    {
        return m_calls.load();
    }

private:
    std::atomic<int> m_calls{0};
};

// Fails exactly on the marked prompt.
class FlakyBackend : public mobilicast::TextGenerator
{
public:
    explicit FlakyBackend(std::string needle)
        : m_needle(std::move(needle))
    {
    }

    GenerationResult generate(const std::string& prompt, const DecodingConfig&, std::uint64_t) override
    {
        if (prompt.find(m_needle) != std::string::npos) {
            throw mobilicast::RateLimited("synthetic failure", 5);
        }
        GenerationResult r;
        r.text = "ok";
        return r;
    }

    std::string id() const override
    {
        return "flaky";
    }

private:
    std::string m_needle;
};

} // namespace

TEST_CASE("batch items derive seeds from the master seed and position only")
{
    const auto assignments = numbered_assignments(4);
    const auto items = mobilicast::make_batch_items(assignments, 42, "{PERSONA}");

    REQUIRE(items.size() == 4);
    std::set<std::uint64_t> seeds;
    for (const auto& item : items) {
        seeds.insert(item.seed);
    }
    CHECK(seeds.size() == 4); // positions get distinct streams

    // Same master seed, different assignment content: seeds are unchanged.
    auto renamed = assignments;
    for (auto& a : renamed) {
        a.persona.city_name = "Elsewhere";
    }
    const auto items2 = mobilicast::make_batch_items(renamed, 42, "{PERSONA}");
    for (std::size_t i = 0; i < items.size(); ++i) {
        CHECK(items[i].seed == items2[i].seed);
    }

    // A different master seed reseeds every position.
    const auto items3 = mobilicast::make_batch_items(assignments, 43, "{PERSONA}");
    for (std::size_t i = 0; i < items.size(); ++i) {
        CHECK(items[i].seed != items3[i].seed);
    }
}

TEST_CASE("batch items carry the rendered prompt")
{
    const auto assignments = numbered_assignments(2);
    const auto items = mobilicast::make_batch_items(assignments, 1, "{DATE} / {WEEKDAY}");
    CHECK(items[0].prompt == "2016-05-05 / Thursday");
    CHECK(items[0].assignment == assignments[0]);
}

TEST_CASE("results align with input order regardless of scheduling")
{
    const auto items = mobilicast::make_batch_items(numbered_assignments(24), 7, "{PERSONA}");
    EchoBackend backend;
    const auto records = mobilicast::run_batch(items, backend, DecodingConfig{}, 8);

    REQUIRE(records.size() == items.size());
    CHECK(backend.calls() == static_cast<int>(items.size()));
    for (std::size_t i = 0; i < items.size(); ++i) {
        CAPTURE(i);
        REQUIRE(records[i].ok());
        REQUIRE(records[i].raw_completion ==
                "echo: " + items[i].prompt + " [seed " + std::to_string(items[i].seed) + "]");
        REQUIRE(records[i].backend_id == "echo");
        REQUIRE(records[i].prompt == items[i].prompt);
    }
}

TEST_CASE("serial and concurrent runs produce identical records")
{
    const auto items = mobilicast::make_batch_items(numbered_assignments(16), 11, "{PERSONA}");
    EchoBackend backend;
    const auto serial = mobilicast::run_batch(items, backend, DecodingConfig{}, 1);
    const auto concurrent = mobilicast::run_batch(items, backend, DecodingConfig{}, 8);
    CHECK(serial == concurrent);
}

TEST_CASE("one failing item is marked without aborting the batch")
{
    const auto items = mobilicast::make_batch_items(numbered_assignments(10), 3, "{PERSONA}");
    FlakyBackend backend("City-3");
    const auto records = mobilicast::run_batch(items, backend, DecodingConfig{}, 4);

    REQUIRE(records.size() == 10);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CAPTURE(i);
        if (i == 3) {
            REQUIRE_FALSE(records[i].ok());
            REQUIRE(records[i].error == "RateLimited");
            REQUIRE(records[i].attempt_count == 5);
            REQUIRE(records[i].raw_completion.empty());
        }
        else {
            REQUIRE(records[i].ok());
            REQUIRE(records[i].raw_completion == "ok");
        }
    }
}

TEST_CASE("degenerate batch inputs are handled")
{
    EchoBackend backend;
    CHECK(mobilicast::run_batch({}, backend, DecodingConfig{}, 4).empty());

    const auto items = mobilicast::make_batch_items(numbered_assignments(2), 1, "{PERSONA}");
    CHECK(mobilicast::run_batch(items, backend, DecodingConfig{}, 64).size() == 2);
    CHECK_THROWS_AS(mobilicast::run_batch(items, backend, DecodingConfig{}, 0),
                    mobilicast::InvalidConfig);
}

TEST_CASE("invalid decoding parameters stop the batch before any request")
{
    const auto items = mobilicast::make_batch_items(numbered_assignments(2), 1, "{PERSONA}");
    EchoBackend backend;
    DecodingConfig decoding;
    decoding.temperature = -1.0;
    CHECK_THROWS_AS(mobilicast::run_batch(items, backend, decoding, 1), mobilicast::InvalidConfig);
    CHECK(backend.calls() == 0);
}
