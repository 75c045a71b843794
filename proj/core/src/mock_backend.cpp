#include "mobilicast/mock_backend.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "mobilicast/diary_render.hpp"
#include "mobilicast/errors.hpp"
#include "mobilicast/taxonomy.hpp"

namespace mobilicast
{

namespace
{

// Canonical place name per 11-type, used for simulated diary rows.
constexpr std::array<const char*, kTypeCount11> kPlaceNames = {
    "Home",       "Office",     "Community Center", "Transit Stop", "School", "Care Center",
    "Store",      "Restaurant", "Errand Stop",      "Park",         "Friend's House",
};

} // namespace

void validate_mock_params(const MockParams& p)
{
    const std::size_t n = kTypeCount11;
    if (p.transition.size() != n) {
        throw InvalidConfig("mock transition matrix must have " + std::to_string(n) + " rows");
    }
    for (std::size_t r = 0; r < n; ++r) {
        if (p.transition[r].size() != n) {
            throw InvalidConfig("mock transition row " + std::to_string(r) + " must have " +
                                std::to_string(n) + " columns");
        }
        double sum = 0.0;
        for (double v : p.transition[r]) {
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw InvalidDistribution("mock transition row " + std::to_string(r) +
                                          " has a negative or non-finite entry");
            }
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-9) {
            throw InvalidDistribution("mock transition row " + std::to_string(r) + " sums to " +
                                      std::to_string(sum) + ", expected 1");
        }
    }
    if (p.dwell_minutes.size() != n) {
        throw InvalidConfig("mock dwell_minutes must have one range per type");
    }
    // Dwell must be positive so simulated time always advances; gaps are capped
    // at two hours so simulated travel never trips the long-gap filter.
    for (const auto& d : p.dwell_minutes) {
        if (d.first < 1 || d.first > d.second || d.second > 1439) {
            throw InvalidRange("dwell range [" + std::to_string(d.first) + ", " +
                               std::to_string(d.second) + "] is not inside 1..1439");
        }
    }
    if (p.gap_minutes.first < 0 || p.gap_minutes.first > p.gap_minutes.second ||
        p.gap_minutes.second > 120) {
        throw InvalidRange("gap range [" + std::to_string(p.gap_minutes.first) + ", " +
                           std::to_string(p.gap_minutes.second) + "] is not inside 0..120");
    }
    if (p.start_type < 0 || static_cast<std::size_t>(p.start_type) >= n) {
        throw InvalidRange("mock start_type out of range");
    }
    if (p.end_by_min < 0 || p.end_by_min > 1439) {
        throw InvalidRange("mock end_by_min outside 0..1439");
    }
}

MockParams default_mock_params()
{
    MockParams p;
    // Columns: Home, Work, Community, In Transit, Education, Care, Shopping,
    // Eat Meal, Other, Recreational, Social.
    p.transition = {
        {0.00, 0.35, 0.04, 0.05, 0.06, 0.04, 0.15, 0.08, 0.05, 0.10, 0.08}, // from Home
        {0.45, 0.00, 0.02, 0.05, 0.02, 0.02, 0.10, 0.20, 0.04, 0.05, 0.05}, // from Work
        {0.55, 0.05, 0.00, 0.05, 0.02, 0.03, 0.10, 0.08, 0.04, 0.04, 0.04}, // from Community
        {0.30, 0.25, 0.03, 0.00, 0.05, 0.04, 0.12, 0.08, 0.05, 0.04, 0.04}, // from In Transit
        {0.50, 0.08, 0.04, 0.06, 0.00, 0.03, 0.08, 0.10, 0.04, 0.04, 0.03}, // from Education
        {0.55, 0.10, 0.03, 0.05, 0.03, 0.00, 0.10, 0.06, 0.04, 0.02, 0.02}, // from Care
        {0.50, 0.05, 0.03, 0.04, 0.02, 0.02, 0.00, 0.12, 0.08, 0.08, 0.06}, // from Shopping
        {0.45, 0.12, 0.03, 0.04, 0.02, 0.02, 0.10, 0.00, 0.06, 0.09, 0.07}, // from Eat Meal
        {0.50, 0.08, 0.04, 0.05, 0.02, 0.03, 0.10, 0.08, 0.00, 0.05, 0.05}, // from Other
        {0.50, 0.05, 0.03, 0.04, 0.02, 0.02, 0.08, 0.12, 0.04, 0.00, 0.10}, // from Recreational
        {0.52, 0.05, 0.03, 0.04, 0.02, 0.02, 0.08, 0.12, 0.04, 0.08, 0.00}, // from Social
    };
    p.dwell_minutes = {
        {240, 600}, // Home
        {240, 540}, // Work
        {45, 150}, // Community
        {5, 30}, // In Transit
        {180, 420}, // Education
        {60, 240}, // Care
        {20, 90}, // Shopping
        {30, 120}, // Eat Meal
        {15, 90}, // Other
        {60, 240}, // Recreational
        {60, 240}, // Social
    };
    p.gap_minutes = {5, 45};
    p.start_type = static_cast<int>(Type11::Home);
    p.end_by_min = 1439;
    validate_mock_params(p);
    return p;
}

MockParams load_mock_params(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoFailure("cannot open mock params file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_mock_params_json(buf.str(), path.string());
}

MockParams parse_mock_params_json(const std::string& text, const std::string& origin)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::exception& e) {
        throw ParseFailure(origin + ": " + e.what());
    }

    MockParams p = default_mock_params();
    try {
        p.transition = j.at("transition").get<std::vector<std::vector<double>>>();
        const auto dwell = j.at("dwell_minutes").get<std::vector<std::vector<int>>>();
        p.dwell_minutes.clear();
        for (const auto& d : dwell) {
            if (d.size() != 2) {
                throw ParseFailure(origin + ": dwell_minutes entries must be [lo, hi]");
            }
            p.dwell_minutes.emplace_back(d[0], d[1]);
        }
        if (j.contains("gap_minutes")) {
            const auto gap = j.at("gap_minutes").get<std::vector<int>>();
            if (gap.size() != 2) {
                throw ParseFailure(origin + ": gap_minutes must be [lo, hi]");
            }
            p.gap_minutes = {gap[0], gap[1]};
        }
        p.start_type = j.value("start_type", p.start_type);
        p.end_by_min = j.value("end_by_min", p.end_by_min);
    }
    catch (const nlohmann::json::exception& e) {
        throw ParseFailure(origin + ": " + e.what());
    }
    validate_mock_params(p);
    return p;
}

std::vector<MockVisit> simulate_day(const MockParams& params, Rng& rng)
{
    std::vector<MockVisit> visits;
    int type = params.start_type;
    int arrival = 0;
    while (true) {
        const auto [dwell_lo, dwell_hi] = params.dwell_minutes[static_cast<std::size_t>(type)];
        const int departure = arrival + static_cast<int>(rng.uniform_int(dwell_lo, dwell_hi));
        if (departure >= params.end_by_min) {
            visits.push_back({type, arrival, 1439});
            break;
        }
        const int gap = static_cast<int>(rng.uniform_int(params.gap_minutes.first, params.gap_minutes.second));
        if (departure + gap > params.end_by_min) {
            visits.push_back({type, arrival, 1439});
            break;
        }
        visits.push_back({type, arrival, departure});
        type = static_cast<int>(rng.categorical(params.transition[static_cast<std::size_t>(type)]));
        arrival = departure + gap;
    }
    return visits;
}

std::vector<DiaryEntry> visits_to_entries(const std::vector<MockVisit>& visits)
{
    const auto& tax = LocationTaxonomy::builtin();
    std::vector<DiaryEntry> out;
    out.reserve(visits.size());
    for (const auto& v : visits) {
        DiaryEntry e;
        e.place_name = kPlaceNames[static_cast<std::size_t>(v.type)];
        e.arrival_min = v.arrival_min;
        e.departure_min = v.departure_min;
        e.code = tax.representative_code(static_cast<Type11>(v.type));
        out.push_back(std::move(e));
    }
    return out;
}

MockBackend::MockBackend(MockParams params)
    : m_params(std::move(params))
{
    validate_mock_params(m_params);
}

GenerationResult MockBackend::generate(const std::string& prompt, const DecodingConfig& decoding,
                                       std::uint64_t seed)
{
    (void)prompt; // the simulator draws everything from the seed
    (void)decoding;
    Rng rng(seed);
    const auto visits = simulate_day(m_params, rng);
    GenerationResult r;
    r.text = render_diary_table(visits_to_entries(visits));
    r.attempt_count = 1;
    r.latency_ms = 0; // fixed so batch outputs are byte-identical across runs
    return r;
}

} // namespace mobilicast
