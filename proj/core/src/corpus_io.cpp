#include "mobilicast/corpus_io.hpp"

#include <fstream>
#include <system_error>
#include <sstream>

#include "json.hpp"

#include "mobilicast/errors.hpp"
#include "persona_json.hpp"

namespace mobilicast
{

namespace
{

using nlohmann::json;

json meta_to_json(const PersonaMeta& m)
{
    json j = json::object();
    if (m.sex) {
        j["sex"] = *m.sex;
    }
    if (m.age) {
        j["age"] = *m.age;
    }
    if (m.race) {
        j["race"] = *m.race;
    }
    if (m.school_enrollment) {
        j["school_enrollment"] = *m.school_enrollment;
    }
    if (m.in_labor_force) {
        j["in_labor_force"] = *m.in_labor_force;
    }
    if (m.employed) {
        j["employed"] = *m.employed;
    }
    if (m.occupation) {
        j["occupation"] = *m.occupation;
    }
    if (m.marital_status) {
        j["marital_status"] = *m.marital_status;
    }
    if (m.household_type) {
        j["household_type"] = *m.household_type;
    }
    if (m.children_under_18) {
        j["children_under_18"] = *m.children_under_18;
    }
    if (m.city_name) {
        j["city_name"] = *m.city_name;
    }
    if (m.state) {
        j["state"] = *m.state;
    }
    return j;
}

PersonaMeta meta_from_json(const json& j)
{
    PersonaMeta m;
    if (j.contains("sex")) {
        m.sex = j.at("sex").get<std::string>();
    }
    if (j.contains("age")) {
        m.age = j.at("age").get<int>();
    }
    if (j.contains("race")) {
        m.race = j.at("race").get<std::string>();
    }
    if (j.contains("school_enrollment")) {
        m.school_enrollment = j.at("school_enrollment").get<bool>();
    }
    if (j.contains("in_labor_force")) {
        m.in_labor_force = j.at("in_labor_force").get<bool>();
    }
    if (j.contains("employed")) {
        m.employed = j.at("employed").get<bool>();
    }
    if (j.contains("occupation")) {
        m.occupation = j.at("occupation").get<std::string>();
    }
    if (j.contains("marital_status")) {
        m.marital_status = j.at("marital_status").get<std::string>();
    }
    if (j.contains("household_type")) {
        m.household_type = j.at("household_type").get<std::string>();
    }
    if (j.contains("children_under_18")) {
        m.children_under_18 = j.at("children_under_18").get<bool>();
    }
    if (j.contains("city_name")) {
        m.city_name = j.at("city_name").get<std::string>();
    }
    if (j.contains("state")) {
        m.state = j.at("state").get<std::string>();
    }
    return m;
}

} // namespace

// PersonaMeta's JSON form is shared with the batch-record reader/writer.
namespace detail
{

nlohmann::json persona_meta_to_json(const PersonaMeta& m)
{
    return meta_to_json(m);
}

PersonaMeta persona_meta_from_json(const nlohmann::json& j)
{
    return meta_from_json(j);
}

} // namespace detail

Corpus load_corpus(const std::filesystem::path& path, std::vector<std::string>* diagnostics)
{
    std::ifstream in(path);
    if (!in) {
        throw IoFailure("cannot open corpus file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus_json(buf.str(), path.string(), diagnostics);
}

Corpus parse_corpus_json(const std::string& text, const std::string& origin,
                         std::vector<std::string>* diagnostics)
{
    json j;
    try {
        j = json::parse(text);
    }
    catch (const json::exception& e) {
        throw ParseFailure(origin + ": " + e.what());
    }

    Corpus out;
    try {
        out.region_id = j.at("region_id").get<std::string>();
        out.source = parse_corpus_source(j.at("source").get<std::string>());
        for (const auto& dj : j.at("diaries")) {
            TravelDiary d;
            d.persona_id = dj.at("persona_id").get<std::string>();
            d.survey_date = parse_date(dj.at("date").get<std::string>());
            for (const auto& ej : dj.at("entries")) {
                DiaryEntry e;
                e.place_name = ej.at("place").get<std::string>();
                e.arrival_min = ej.at("arrive").get<int>();
                e.departure_min = ej.at("depart").get<int>();
                e.code = ej.at("code").get<int>();
                d.entries.push_back(std::move(e));
            }
            if (dj.contains("persona")) {
                d.persona = meta_from_json(dj.at("persona"));
            }
            out.diaries.push_back(std::move(d));
        }
    }
    catch (const json::exception& e) {
        throw ParseFailure(origin + ": " + e.what());
    }

    // Invariant-violating diaries are dropped, not fatal; the load only
    // fails when nothing survives.
    std::vector<TravelDiary> kept;
    kept.reserve(out.diaries.size());
    for (std::size_t i = 0; i < out.diaries.size(); ++i) {
        const std::string violation = diary_violation(out.diaries[i]);
        if (violation.empty()) {
            kept.push_back(std::move(out.diaries[i]));
        }
        else if (diagnostics != nullptr) {
            diagnostics->push_back(origin + ": excluded diary " + std::to_string(i) +
                                   " (persona " + out.diaries[i].persona_id + "): " + violation);
        }
    }
    out.diaries = std::move(kept);
    if (out.diaries.empty()) {
        throw EmptyCorpus(origin + ": no valid diaries");
    }
    return out;
}

std::string corpus_to_json(const Corpus& corpus)
{
    json diaries = json::array();
    for (const auto& d : corpus.diaries) {
        json entries = json::array();
        for (const auto& e : d.entries) {
            entries.push_back({
                {"place", e.place_name},
                {"arrive", e.arrival_min},
                {"depart", e.departure_min},
                {"code", e.code},
            });
        }
        json dj = {
            {"persona_id", d.persona_id},
            {"date", format_date(d.survey_date)},
            {"entries", std::move(entries)},
        };
        if (d.persona) {
            dj["persona"] = meta_to_json(*d.persona);
        }
        diaries.push_back(std::move(dj));
    }
    const json j = {
        {"region_id", corpus.region_id},
        {"source", std::string(corpus_source_id(corpus.source))},
        {"diaries", std::move(diaries)},
    };
    return j.dump(2) + "\n";
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path)
{
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream outf(path);
    if (!outf) {
        throw IoFailure("cannot write corpus file " + path.string());
    }
    outf << corpus_to_json(corpus);
    if (!outf) {
        throw IoFailure("short write to corpus file " + path.string());
    }
}

} // namespace mobilicast
