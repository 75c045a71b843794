#include "mobilicast/diary_parse.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "mobilicast/errors.hpp"
#include "mobilicast/time_parse.hpp"

namespace mobilicast
{

namespace
{

std::string trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return std::string(s);
}

// Lowercase, strip markdown emphasis characters, collapse whitespace runs.
std::string normalize_header_cell(std::string_view s)
{
    std::string out;
    bool in_space = true;
    for (char c : s) {
        if (c == '*' || c == '_' || c == '`') {
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!in_space && !out.empty()) {
                out += ' ';
            }
            in_space = true;
            continue;
        }
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        in_space = false;
    }
    while (!out.empty() && out.back() == ' ') {
        out.pop_back();
    }
    return out;
}

// "| a | b |" -> {"a", "b"}; outer empty segments from the edge pipes drop,
// interior empty cells survive.
std::vector<std::string> split_cells(std::string_view line)
{
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == '|') {
            cells.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (!cells.empty() && cells.front().empty()) {
        cells.erase(cells.begin());
    }
    if (!cells.empty() && cells.back().empty()) {
        cells.pop_back();
    }
    return cells;
}

bool is_separator_row(const std::vector<std::string>& cells)
{
    bool saw_dash = false;
    for (const auto& c : cells) {
        for (char ch : c) {
            if (ch == '-') {
                saw_dash = true;
            }
            else if (ch != ':' && ch != ' ') {
                return false;
            }
        }
    }
    return saw_dash;
}

struct HeaderColumns {
    std::size_t place = 0;
    std::size_t arrival = 0;
    std::size_t departure = 0;
    std::size_t code = 0;
};

std::optional<HeaderColumns> match_header(const std::vector<std::string>& cells)
{
    HeaderColumns cols;
    std::array<bool, 4> found{};
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string norm = normalize_header_cell(cells[i]);
        if (norm == "place visited") {
            cols.place = i;
            found[0] = true;
        }
        else if (norm == "arrival time") {
            cols.arrival = i;
            found[1] = true;
        }
        else if (norm == "departure time") {
            cols.departure = i;
            found[2] = true;
        }
        else if (norm == "location type") {
            cols.code = i;
            found[3] = true;
        }
    }
    if (found[0] && found[1] && found[2] && found[3]) {
        return cols;
    }
    return std::nullopt;
}

std::optional<int> parse_code_text(const std::string& text)
{
    if (text.empty() || text.size() > 9) {
        return std::nullopt;
    }
    int v = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return std::nullopt;
        }
        v = v * 10 + (c - '0');
    }
    return v;
}

std::string cell_at(const std::vector<std::string>& cells, std::size_t idx)
{
    return idx < cells.size() ? cells[idx] : std::string{};
}

} // namespace

void validate_filters(const FilterConfig& f)
{
    if (f.max_gap_minutes < 1) {
        throw InvalidConfig("max_gap_minutes must be positive");
    }
}

std::string_view rejection_kind_name(RejectionKind k)
{
    switch (k) {
    case RejectionKind::NoTableFound:
        return "NoTableFound";
    case RejectionKind::UnparseableTime:
        return "UnparseableTime";
    case RejectionKind::MissingTime:
        return "MissingTime";
    case RejectionKind::NegativeGap:
        return "NegativeGap";
    case RejectionKind::GapTooLarge:
        return "GapTooLarge";
    case RejectionKind::NonMonotonicTimes:
        return "NonMonotonicTimes";
    case RejectionKind::Code97Present:
        return "Code97Present";
    case RejectionKind::UnknownCode:
        return "UnknownCode";
    case RejectionKind::EmptyTable:
        return "EmptyTable";
    }
    return "NoTableFound";
}

std::variant<std::vector<TableRow>, RejectionReason> extract_table(const std::string& raw)
{
    std::istringstream stream(raw);
    std::string line;

    std::optional<HeaderColumns> cols;
    std::vector<TableRow> rows;
    bool in_table = false;

    while (std::getline(stream, line)) {
        const bool has_pipe = line.find('|') != std::string::npos;
        if (!in_table) {
            if (!has_pipe) {
                continue;
            }
            cols = match_header(split_cells(line));
            if (cols) {
                in_table = true;
            }
            continue;
        }
        if (!has_pipe) {
            break; // prose after the table ends it; later tables are ignored
        }
        const auto cells = split_cells(line);
        if (is_separator_row(cells)) {
            continue;
        }
        TableRow row;
        row.place = cell_at(cells, cols->place);
        row.arrival = cell_at(cells, cols->arrival);
        row.departure = cell_at(cells, cols->departure);
        row.code = cell_at(cells, cols->code);
        rows.push_back(std::move(row));
    }

    if (!in_table) {
        return RejectionReason{RejectionKind::NoTableFound, "no table header with the four diary columns"};
    }
    if (rows.empty()) {
        return RejectionReason{RejectionKind::EmptyTable, "table header without data rows"};
    }
    return rows;
}

std::variant<TravelDiary, RejectionReason> parse_diary(const std::vector<TableRow>& rows,
                                                       const SurveyAssignment& assignment,
                                                       const FilterConfig& filters,
                                                       const LocationTaxonomy& taxonomy)
{
    validate_filters(filters);
    if (rows.empty()) {
        return RejectionReason{RejectionKind::EmptyTable, "no rows to parse"};
    }

    const std::size_t n = rows.size();
    const auto row_label = [](std::size_t i) { return "row " + std::to_string(i); };

    // Times. With require_times the first missing/unparseable cell rejects;
    // without it, a diary whose times do not all parse keeps its visit
    // sequence with every clock zeroed (sequence-only data).
    std::vector<int> arrivals(n, 0);
    std::vector<int> departures(n, 0);
    bool zero_times = false;
    {
        bool all_parsed = true;
        RejectionReason failure;
        for (std::size_t i = 0; i < n && all_parsed; ++i) {
            const std::string arr_text = trim(rows[i].arrival);
            const std::string dep_text = trim(rows[i].departure);
            if (arr_text.empty() || dep_text.empty()) {
                failure = {RejectionKind::MissingTime,
                           row_label(i) + ": empty " + (arr_text.empty() ? "arrival" : "departure") +
                               " cell"};
                all_parsed = false;
                break;
            }
            const auto arr = try_parse_time(arr_text);
            const auto dep = try_parse_time(dep_text);
            if (!arr || !dep) {
                failure = {RejectionKind::UnparseableTime,
                           row_label(i) + ": '" + (!arr ? arr_text : dep_text) + "'"};
                all_parsed = false;
                break;
            }
            arrivals[i] = *arr;
            departures[i] = *dep;
        }
        if (!all_parsed) {
            if (filters.require_times) {
                return failure;
            }
            std::fill(arrivals.begin(), arrivals.end(), 0);
            std::fill(departures.begin(), departures.end(), 0);
            zero_times = true;
        }
    }
    (void)zero_times;

    // Codes.
    std::vector<int> codes(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string code_text = trim(rows[i].code);
        const auto code = parse_code_text(code_text);
        if (!code || !taxonomy.valid_code(*code)) {
            return RejectionReason{RejectionKind::UnknownCode,
                                   row_label(i) + ": '" + code_text + "' is not a survey code"};
        }
        codes[i] = *code;
    }

    // Within-row time order.
    for (std::size_t i = 0; i < n; ++i) {
        if (arrivals[i] > departures[i]) {
            return RejectionReason{RejectionKind::NonMonotonicTimes,
                                   row_label(i) + ": departs before it arrives"};
        }
    }

    // Between-row gaps.
    for (std::size_t i = 1; i < n; ++i) {
        const int gap = arrivals[i] - departures[i - 1];
        if (gap < 0) {
            return RejectionReason{RejectionKind::NegativeGap,
                                   row_label(i) + ": arrives " + std::to_string(-gap) +
                                       " min before leaving the previous place"};
        }
        if (gap > filters.max_gap_minutes) {
            return RejectionReason{RejectionKind::GapTooLarge,
                                   row_label(i) + ": " + std::to_string(gap) + " min gap exceeds " +
                                       std::to_string(filters.max_gap_minutes)};
        }
    }

    // Catch-all code.
    if (filters.drop_code_97) {
        for (std::size_t i = 0; i < n; ++i) {
            if (codes[i] == 97) {
                return RejectionReason{RejectionKind::Code97Present, row_label(i) + ": code 97"};
            }
        }
    }

    TravelDiary d;
    d.survey_date = assignment.survey_date;
    d.persona = PersonaMeta::from_persona(assignment.persona);
    d.entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        DiaryEntry e;
        e.place_name = trim(rows[i].place);
        e.arrival_min = arrivals[i];
        e.departure_min = departures[i];
        e.code = codes[i];
        d.entries.push_back(std::move(e));
    }
    return d;
}

BuildResult build_corpus(const std::vector<GenerationRecord>& records, const FilterConfig& filters,
                         const LocationTaxonomy& taxonomy)
{
    validate_filters(filters);
    BuildResult res;
    res.corpus.source = CorpusSource::Generated;
    if (!records.empty()) {
        res.corpus.region_id = records.front().assignment.persona.region_id;
    }

    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        const auto extracted = extract_table(rec.raw_completion);
        if (const auto* rej = std::get_if<RejectionReason>(&extracted)) {
            ++res.rejections[std::string(rejection_kind_name(rej->kind))];
            continue;
        }
        auto parsed = parse_diary(std::get<std::vector<TableRow>>(extracted), rec.assignment, filters,
                                  taxonomy);
        if (const auto* rej = std::get_if<RejectionReason>(&parsed)) {
            ++res.rejections[std::string(rejection_kind_name(rej->kind))];
            continue;
        }
        TravelDiary diary = std::get<TravelDiary>(std::move(parsed));
        char id[16];
        std::snprintf(id, sizeof(id), "gen-%06zu", i);
        diary.persona_id = id;
        res.corpus.diaries.push_back(std::move(diary));
    }
    return res;
}

std::string rejection_summary_to_json(const RejectionSummary& summary)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [kind, count] : summary) {
        j[kind] = count;
    }
    return j.dump(2) + "\n";
}

} // namespace mobilicast
