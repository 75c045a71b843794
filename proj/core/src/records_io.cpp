#include "mobilicast/records_io.hpp"

#include <fstream>
#include <system_error>

#include "json.hpp"

#include "mobilicast/errors.hpp"

namespace mobilicast
{

namespace
{

using nlohmann::json;

json persona_to_json(const Persona& p)
{
    json j = {
        {"sex", p.sex},
        {"age", p.age},
        {"race", p.race},
        {"school_enrollment", p.school_enrollment},
        {"in_labor_force", p.in_labor_force},
        {"employed", p.employed},
        {"marital_status", p.marital_status},
        {"household_type", p.household_type},
        {"children_under_18", p.children_under_18},
        {"city_name", p.city_name},
        {"state", p.state},
        {"region_id", p.region_id},
    };
    j["occupation"] = p.occupation ? json(*p.occupation) : json(nullptr);
    return j;
}

Persona persona_from_json(const json& j)
{
    Persona p;
    p.sex = j.at("sex").get<std::string>();
    p.age = j.at("age").get<int>();
    p.race = j.at("race").get<std::string>();
    p.school_enrollment = j.at("school_enrollment").get<bool>();
    p.in_labor_force = j.at("in_labor_force").get<bool>();
    p.employed = j.at("employed").get<bool>();
    if (j.contains("occupation") && !j.at("occupation").is_null()) {
        p.occupation = j.at("occupation").get<std::string>();
    }
    p.marital_status = j.at("marital_status").get<std::string>();
    p.household_type = j.at("household_type").get<std::string>();
    p.children_under_18 = j.at("children_under_18").get<bool>();
    p.city_name = j.at("city_name").get<std::string>();
    p.state = j.at("state").get<std::string>();
    p.region_id = j.at("region_id").get<std::string>();
    return p;
}

} // namespace

std::string record_to_json_line(const GenerationRecord& rec)
{
    json j = {
        {"assignment",
         {
             {"date", format_date(rec.assignment.survey_date)},
             {"weekday", rec.assignment.weekday},
             {"persona", persona_to_json(rec.assignment.persona)},
         }},
        {"prompt", rec.prompt},
        {"raw_completion", rec.raw_completion},
        {"backend_id", rec.backend_id},
        {"latency_ms", rec.latency_ms},
        {"attempt_count", rec.attempt_count},
    };
    j["error"] = rec.error ? json(*rec.error) : json(nullptr);
    return j.dump();
}

GenerationRecord record_from_json_line(const std::string& line, const std::string& origin)
{
    json j;
    try {
        j = json::parse(line);
    }
    catch (const json::exception& e) {
        throw ParseFailure(origin + ": " + e.what());
    }
    GenerationRecord rec;
    try {
        const auto& aj = j.at("assignment");
        rec.assignment = make_assignment(persona_from_json(aj.at("persona")),
                                         parse_date(aj.at("date").get<std::string>()));
        rec.prompt = j.at("prompt").get<std::string>();
        rec.raw_completion = j.at("raw_completion").get<std::string>();
        rec.backend_id = j.at("backend_id").get<std::string>();
        rec.latency_ms = j.at("latency_ms").get<std::int64_t>();
        rec.attempt_count = j.at("attempt_count").get<int>();
        if (j.contains("error") && !j.at("error").is_null()) {
            rec.error = j.at("error").get<std::string>();
        }
    }
    catch (const json::exception& e) {
        throw ParseFailure(origin + ": " + e.what());
    }
    return rec;
}

void save_records(const std::vector<GenerationRecord>& records, const std::filesystem::path& path)
{
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path);
    if (!out) {
        throw IoFailure("cannot write records file " + path.string());
    }
    for (const auto& rec : records) {
        out << record_to_json_line(rec) << '\n';
    }
    if (!out) {
        throw IoFailure("short write to records file " + path.string());
    }
}

std::vector<GenerationRecord> load_records(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoFailure("cannot open records file " + path.string());
    }
    std::vector<GenerationRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        out.push_back(record_from_json_line(line, path.string() + ":" + std::to_string(line_no)));
    }
    return out;
}

} // namespace mobilicast
