#ifndef MOBILICAST_MOCK_BACKEND_HPP
#define MOBILICAST_MOCK_BACKEND_HPP

#include <filesystem>
#include <utility>
#include <vector>

#include "mobilicast/backend.hpp"
#include "mobilicast/rng.hpp"
#include "mobilicast/types.hpp"

namespace mobilicast
{

// Parameters of the local diary simulator: a first-order Markov chain over
// the 11 canonical activity types plus per-type dwell-time and global
// travel-gap ranges (minutes, inclusive).
struct MockParams {
    std::vector<std::vector<double>> transition; // 11x11, rows sum to 1
    std::vector<std::pair<int, int>> dwell_minutes; // one [lo, hi] per type
    std::pair<int, int> gap_minutes{5, 45};
    int start_type = 0; // canonical index of the first visit's type
    int end_by_min = 1439; // no new activity begins after this minute

    bool operator==(const MockParams&) const = default;
};

// Shape, stochasticity and range checks; also rejects parameter sets where
// simulated time could stop advancing. Throws InvalidConfig /
// InvalidDistribution / InvalidRange.
void validate_mock_params(const MockParams& p);

// Built-in home/work-centric parameter set; lets the CLI run without a
// params file.
MockParams default_mock_params();

// JSON file: {"transition": [[..] x11], "dwell_minutes": [[lo, hi] x11],
// "gap_minutes": [lo, hi], "start_type": 0, "end_by_min": 1439}; the last
// three are optional.
MockParams load_mock_params(const std::filesystem::path& path);
MockParams parse_mock_params_json(const std::string& text, const std::string& origin = "<mock-params>");

// One simulated visit, in collapsed type space.
struct MockVisit {
    int type = 0;
    int arrival_min = 0;
    int departure_min = 0;

    bool operator==(const MockVisit&) const = default;
};

// Simulates one person-day:
//   - the first visit starts at minute 0 with params.start_type
//   - each visit dwells uniform(dwell_minutes[type])
//   - each move takes uniform(gap_minutes) travel time
//   - the successor type is drawn from the transition row of the current type
//   - once the next departure or arrival would pass end_by_min, the current
//     visit becomes the last and departs at 1439
// The stop decision never looks at a sampled successor type, so observed
// transition frequencies are unbiased estimates of the matrix.
std::vector<MockVisit> simulate_day(const MockParams& params, Rng& rng);

// Collapsed visits -> concrete diary rows (canonical place names and one
// representative survey code per type).
std::vector<DiaryEntry> visits_to_entries(const std::vector<MockVisit>& visits);

// TextGenerator that renders simulate_day output as a markdown diary table.
// The prompt text is ignored; all variation comes from the per-request seed.
class MockBackend : public TextGenerator
{
public:
    explicit MockBackend(MockParams params);

    GenerationResult generate(const std::string& prompt, const DecodingConfig& decoding,
                              std::uint64_t seed) override;

    std::string id() const override
    {
        return "mock";
    }

    const MockParams& params() const
    {
        return m_params;
    }

private:
    MockParams m_params;
};

} // namespace mobilicast

#endif // MOBILICAST_MOCK_BACKEND_HPP
