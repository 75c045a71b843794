#ifndef MOBILICAST_CORPUS_IO_HPP
#define MOBILICAST_CORPUS_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "mobilicast/types.hpp"

namespace mobilicast
{

// Corpus file layout (JSON):
//
//   {
//     "region_id": "sf",
//     "source": "actual" | "generated",
//     "diaries": [
//       {
//         "persona_id": "p-0001",
//         "date": "2016-05-05",
//         "entries": [
//           { "place": "Home", "arrive": 0, "depart": 450, "code": 1 },
//           ...
//         ],
//         "persona": { "sex": "female", "age": 59, ... }   // optional
//       },
//       ...
//     ]
//   }
//
// The per-diary "persona" object is optional and every field inside it is
// optional; it round-trips unchanged.
//
// A file that is not valid JSON in this shape fails whole with ParseFailure.
// Individual diaries violating the stored-diary invariants (see
// diary_violation) are excluded instead: each exclusion appends one message
// naming the diary to `diagnostics` (when given), and the load succeeds as
// long as at least one diary survives. Zero surviving diaries -> EmptyCorpus.

Corpus load_corpus(const std::filesystem::path& path,
                   std::vector<std::string>* diagnostics = nullptr);
Corpus parse_corpus_json(const std::string& text, const std::string& origin = "<corpus>",
                         std::vector<std::string>* diagnostics = nullptr);

void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
std::string corpus_to_json(const Corpus& corpus);

} // namespace mobilicast

#endif // MOBILICAST_CORPUS_IO_HPP
