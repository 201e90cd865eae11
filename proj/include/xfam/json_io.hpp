// JSON interchange for families and pairs plus atomic file output.
//
// Family form: {"n": 7, "k": 3, "sets": [[1,2,3],[1,4,5]]} with strictly
// ascending inner lists and ascending lexicographic outer order.
// Pair form:   {"f": <family>, "g": <family>} over one ground set.
#pragma once

#include <string>

#include "json.hpp"
#include "xfam/family.hpp"
#include "xfam/search.hpp"
#include "xfam/shifting.hpp"

namespace xfam {

nlohmann::json family_to_json(const Family& f);
Family family_from_json(const nlohmann::json& j);

nlohmann::json pair_to_json(const CrossPair& p);
CrossPair pair_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const AdExtremisReport& r);
nlohmann::json search_result_to_json(const SearchConfig& cfg, const SearchResult& r);

// Parses a file, surfacing line/column diagnostics on malformed input.
nlohmann::json load_json_file(const std::string& path);

// Writes via a temporary sibling file and rename, so a killed process never
// leaves a partial document at the target path.
void atomic_write_text(const std::string& path, const std::string& contents);

}  // namespace xfam
