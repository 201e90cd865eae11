#include "xfam/json_io.hpp"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace xfam {

using nlohmann::json;

namespace {

std::vector<std::vector<int>> listed_members(const Family& f) {
  std::vector<std::vector<int>> lists;
  lists.reserve(f.members.size());
  for (Mask m : f.members) lists.push_back(elements_of(m));
  std::sort(lists.begin(), lists.end());
  return lists;
}

}  // namespace

json family_to_json(const Family& f) {
  json j;
  j["n"] = f.n;
  j["k"] = f.k;
  j["sets"] = listed_members(f);
  return j;
}

Family family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("sets"))
    throw std::invalid_argument("family JSON needs fields n, k, sets");
  const int n = j.at("n").get<int>();
  const int k = j.at("k").get<int>();
  std::vector<std::vector<int>> lists = j.at("sets").get<std::vector<std::vector<int>>>();
  for (const auto& s : lists) {
    if (static_cast<int>(s.size()) != k) throw std::invalid_argument("set with wrong cardinality in family JSON");
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i - 1] >= s[i]) throw std::invalid_argument("inner lists must be strictly ascending");
  }
  if (!std::is_sorted(lists.begin(), lists.end()))
    throw std::invalid_argument("outer order must be ascending lexicographic");
  std::vector<Mask> ms;
  ms.reserve(lists.size());
  for (const auto& s : lists) ms.push_back(mask_of(s, n));
  return Family::make(n, k, std::move(ms));
}

json pair_to_json(const CrossPair& p) {
  json j;
  j["f"] = family_to_json(p.f);
  j["g"] = family_to_json(p.g);
  return j;
}

CrossPair pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("f") || !j.contains("g"))
    throw std::invalid_argument("pair JSON needs fields f, g");
  return CrossPair::make(family_from_json(j.at("f")), family_from_json(j.at("g")));
}

json report_to_json(const AdExtremisReport& r) {
  json j;
  j["final_pair"] = pair_to_json(r.final_pair);
  j["shifts_applied"] = json::array();
  for (auto [i, jj] : r.shifts_applied) j["shifts_applied"].push_back({i, jj});
  j["skipped"] = json::array();
  for (const SkipEvent& s : r.skipped) {
    const char* side = s.side == StarSide::F ? "f" : s.side == StarSide::G ? "g" : "both";
    j["skipped"].push_back({{"i", s.i}, {"j", s.j}, {"star_side", side}});
  }
  j["classification"] = json::array();
  for (const auto& [ij, tag] : r.classification) {
    const char* t = tag == PairType::A ? "A" : tag == PairType::B ? "B" : "C";
    j["classification"].push_back({{"i", ij.first}, {"j", ij.second}, {"type", t}});
  }
  j["potential_trace"] = r.potential_trace;

  StructureReport sr = structure_report(r);
  json entries = json::array();
  for (const StructureEntry& e : sr.entries) {
    json je{{"i", e.i}, {"j", e.j}};
    if (e.z) je["z"] = *e.z;
    je["rest_empty"] = e.rest_empty;
    je["case_a_candidate"] = e.case_a_candidate;
    if (e.quadruple) {
      je["quadruple"] = *e.quadruple;
      je["quadruple_transversal"] = e.quadruple_transversal;
    }
    entries.push_back(std::move(je));
  }
  j["structure"] = {{"entries", std::move(entries)}};
  return j;
}

json search_result_to_json(const SearchConfig& cfg, const SearchResult& r) {
  const char* objective = cfg.objective == Objective::Sum ? "sum" : "product";
  const char* constraint = cfg.constraint == Constraint::NontrivialBoth ? "nontrivial"
                           : cfg.constraint == Constraint::NontrivialBothInitial
                               ? "nontrivial-initial"
                               : "ci-min-g";
  const char* strategy = cfg.strategy == Strategy::ExhaustiveG        ? "exhaustive-g"
                         : cfg.strategy == Strategy::InitialDownsets ? "initial-downsets"
                                                                      : "branch-and-bound";
  json j;
  j["config"] = {{"n", cfg.n},
                 {"k", cfg.k},
                 {"l", cfg.l},
                 {"objective", objective},
                 {"constraint", constraint},
                 {"min_g", cfg.min_g},
                 {"strategy", strategy},
                 {"jobs", cfg.jobs},
                 {"node_budget", cfg.node_budget},
                 {"time_budget_ms", cfg.time_budget_ms}};
  j["best_value"] = r.best_value;
  j["witnesses"] = json::array();
  for (const CrossPair& w : r.witnesses) j["witnesses"].push_back(pair_to_json(w));
  j["class_count"] = r.class_count;
  j["optimum_count"] = r.optimum_count;
  j["witnesses_capped"] = r.witnesses_capped;
  j["enumerated"] = r.enumerated;
  j["proof_of_exhaustiveness"] = r.exhaustiveness;
  j["complete"] = r.complete;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);  // parse errors carry line/column positions
}

void atomic_write_text(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace xfam
