#include "doctest.h"

#include <string>
#include <vector>

#include "mobilicast/errors.hpp"
#include "mobilicast/records_io.hpp"

#include "test_util.hpp"

using mobilicast::GenerationRecord;

namespace
{

GenerationRecord sample_record()
{
    mobilicast::Persona p;
    p.sex = "male";
    p.age = 41;
    p.race = "Asian alone";
    p.in_labor_force = true;
    p.employed = true;
    p.occupation = "service";
    p.marital_status = "married";
    p.household_type = "married couple family";
    p.children_under_18 = true;
    p.city_name = "Riverton";
    p.state = "VA";
    p.region_id = "riverton";

    GenerationRecord r;
    r.assignment = mobilicast::make_assignment(p, mobilicast::Date{2016, 11, 3});
    r.prompt = "Prompt with \"quotes\",\nnewlines and unicode: naïve — done.";
    r.raw_completion = "| a | b |\n| 1 | 2 |";
    r.backend_id = "mock";
    r.latency_ms = 12;
    r.attempt_count = 2;
    return r;
}

} // namespace

TEST_CASE("a record survives the JSON line round-trip")
{
    const GenerationRecord r = sample_record();
    const std::string line = mobilicast::record_to_json_line(r);
    CHECK(line.find('\n') == std::string::npos); // one record per line
    const GenerationRecord back = mobilicast::record_from_json_line(line, "test");
    CHECK(back == r);
    CHECK(back.ok());
}

TEST_CASE("failed records carry their error kind instead of text")
{
    GenerationRecord r = sample_record();
    r.raw_completion.clear();
    r.error = "RateLimited";
    r.attempt_count = 5;
    const GenerationRecord back = mobilicast::record_from_json_line(
        mobilicast::record_to_json_line(r), "test");
    CHECK(back == r);
    CHECK_FALSE(back.ok());
    CHECK(back.error == "RateLimited");
}

TEST_CASE("record files round-trip losslessly")
{
    const auto dir = testsupport::scratch_dir("records");
    const auto path = dir / "batch.jsonl";

    std::vector<GenerationRecord> records = {sample_record(), sample_record()};
    records[1].error = "BackendUnavailable";
    records[1].raw_completion.clear();
    records[1].assignment.weekday = "Thursday";

    mobilicast::save_records(records, path);
    const auto loaded = mobilicast::load_records(path);
    CHECK(loaded == records);
}

TEST_CASE("records without personas still round-trip")
{
    GenerationRecord r;
    r.assignment.survey_date = mobilicast::Date{2017, 1, 2};
    r.assignment.weekday = "Monday";
    r.prompt = "p";
    r.raw_completion = "c";
    r.backend_id = "http:model-x";
    const GenerationRecord back = mobilicast::record_from_json_line(
        mobilicast::record_to_json_line(r), "test");
    CHECK(back == r);
}

TEST_CASE("malformed lines and missing files fail with clear kinds")
{
    CHECK_THROWS_AS(mobilicast::record_from_json_line("{ nope", "test"), mobilicast::ParseFailure);
    CHECK_THROWS_AS(mobilicast::record_from_json_line("[1, 2]", "test"), mobilicast::ParseFailure);
    CHECK_THROWS_AS(mobilicast::load_records("/nonexistent/dir/records.jsonl"), mobilicast::IoFailure);

    const auto dir = testsupport::scratch_dir("records-bad");
    const auto path = dir / "bad.jsonl";
    {
        std::ofstream out(path);
        out << mobilicast::record_to_json_line(sample_record()) << "\n";
        out << "this is not json\n";
    }
    CHECK_THROWS_AS(mobilicast::load_records(path), mobilicast::ParseFailure);
}

TEST_CASE("saving into a missing directory creates it")
{
    const auto dir = testsupport::scratch_dir("records-nested");
    const auto path = dir / "deep" / "down" / "batch.jsonl";
    mobilicast::save_records({sample_record()}, path);
    CHECK(mobilicast::load_records(path).size() == 1);
}
