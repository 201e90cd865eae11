// Exhaustive and pruned maximization of |F| + |G| (or |F| * |G|) over
// cross-intersecting pairs, with canonical witness reporting. Enumeration runs
// over the side of smaller uniformity; the partner is forced to the full
// transversal family, which is lossless for every objective handled here.
#pragma once

#include <string>
#include <vector>

#include "xfam/family.hpp"

namespace xfam {

enum class Objective { Sum, Product };

enum class Constraint {
  NontrivialBoth,
  NontrivialBothInitial,
  CiOnlyMinG,
};

enum class Strategy { ExhaustiveG, InitialDownsets, BranchAndBound };

struct SearchConfig {
  int n = 0, k = 0, l = 0;
  Objective objective = Objective::Sum;
  Constraint constraint = Constraint::NontrivialBoth;
  int min_g = 1;  // only for CiOnlyMinG
  Strategy strategy = Strategy::ExhaustiveG;
  int jobs = 1;
  long long node_budget = -1;     // < 0: unlimited
  long long time_budget_ms = -1;  // < 0: unlimited
  // Degenerate instances (n = k + l) carry astronomically many optima; past
  // this many stored optima the class report is dropped, the value stays exact.
  std::size_t witness_cap = std::size_t{1} << 17;
};

struct SearchResult {
  long long best_value = 0;           // 0 when no feasible pair exists
  std::vector<CrossPair> witnesses;   // one canonical representative per class, ascending
  int class_count = 0;                // -1 when witness enumeration was capped
  long long optimum_count = 0;        // optimum-attaining candidates before dedup
  bool witnesses_capped = false;
  long long enumerated = 0;
  std::string exhaustiveness;
  bool complete = true;
  long long wall_time_ms = 0;
};

SearchResult max_pair(const SearchConfig& cfg);

// Lexicographically minimal relabeling of the pair under all permutations of
// [n], comparing the (f, g) member sequences in order. Capped at n <= 9.
CrossPair canonical_form(const CrossPair& p);

// Distinct canonical classes; with unordered_pair (sensible only for equal
// uniformities) the two orientations of a pair are identified.
std::vector<CrossPair> canonical_classes(const std::vector<CrossPair>& optima, bool unordered_pair);

enum class TheoremCheck {
  NontrivialSumMax,  // exhaustive best vs h(n,k,l), uniqueness of the optimum shape
  InitialSumMax,     // down-set best vs g(n,k,l)
  NonemptySumMax,    // nonempty-pair best vs ft bound, strictness of large-g optima
};

struct TheoremReport {
  bool pass = false;
  bool skipped = false;
  std::string detail;
  long long search_value = 0;
  long long formula_value = 0;
  int class_count = 0;
};

TheoremReport verify_theorem(TheoremCheck check, int n, int k, int l, int jobs = 1);

}  // namespace xfam
