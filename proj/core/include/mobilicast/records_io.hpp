#ifndef MOBILICAST_RECORDS_IO_HPP
#define MOBILICAST_RECORDS_IO_HPP

#include <filesystem>
#include <vector>

#include "mobilicast/backend.hpp"

namespace mobilicast
{

// Batch records persist as JSON Lines, one generation record per line:
//
//   { "assignment": { "date": "2016-05-05", "weekday": "Thursday",
//                     "persona": { "sex": ..., "age": ..., ... } },
//     "prompt": "...", "raw_completion": "...", "backend_id": "mock",
//     "latency_ms": 0, "attempt_count": 1, "error": null }
//
// Failed generations carry the error kind in "error" and an empty
// raw_completion. Files round-trip losslessly.

void save_records(const std::vector<GenerationRecord>& records, const std::filesystem::path& path);
std::vector<GenerationRecord> load_records(const std::filesystem::path& path);

std::string record_to_json_line(const GenerationRecord& rec);
GenerationRecord record_from_json_line(const std::string& line, const std::string& origin = "<records>");

} // namespace mobilicast

#endif // MOBILICAST_RECORDS_IO_HPP
