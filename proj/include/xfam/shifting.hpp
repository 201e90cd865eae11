// The shifting operator S_ij, shift-to-initial closure, star-formation
// diagnostics and the shifting-ad-extremis engine for cross pairs.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "xfam/family.hpp"

namespace xfam {

// S_ij(s): replace j by i when i is absent, j present and the replacement is
// not already a member of `home`; otherwise s is returned unchanged.
Mask shift_set(Mask s, int i, int j, const Family& home);

Family shift_family(const Family& f, int i, int j);

// Repeated sweeps of S_ij over all i < j until no shift applies. The result
// is an initial family of the same size.
Family shift_to_initial(const Family& f);

struct StarFormation {
  bool formed = false;
  int center = 0;            // = i when formed
  bool traces_disjoint = false;  // F(i) and F(j) share no set
  bool covers_ij = false;        // every member meets {i, j}
};
// Requires a non-trivial input family.
StarFormation star_formation_witness(const Family& f, int i, int j);

enum class PairType { A, B, C };

// Trichotomy of an index pair for a cross pair: fixes both families (A),
// stars the f-side (B), stars the g-side (C). Unfinished pairs match none.
struct PairClass {
  bool fixes_both = false;
  bool f_star = false;
  bool g_star = false;
  std::optional<PairType> primary() const;
};
PairClass classify_pair(const CrossPair& p, int i, int j);

enum class StarSide { F, G, Both };

struct SkipEvent {
  int i = 0, j = 0;
  StarSide side = StarSide::F;
};

struct AdExtremisReport {
  CrossPair final_pair;
  std::vector<std::pair<int, int>> shifts_applied;
  std::vector<SkipEvent> skipped;
  std::map<std::pair<int, int>, PairType> classification;
  std::vector<long long> potential_trace;  // element sum before and after each shift
};

long long element_sum_potential(const CrossPair& p);

// Simultaneous shifting of a non-trivial cross-intersecting pair, skipping
// star-forming shifts, swept in lexicographic rounds until a full round
// applies nothing. Previously skipped pairs are retried in every round.
AdExtremisReport shift_ad_extremis(const CrossPair& p);

// Structural witnesses extracted from a finished run, for the g-star pairs:
// the common element z of the f-members avoiding {i,j} when they form a star,
// the quadruple Z = {i,j,x,y} from the closest K,H in g, and whether Z is a
// transversal of f.
struct StructureEntry {
  int i = 0, j = 0;
  std::optional<int> z;
  bool rest_empty = false;        // no f-member avoids {i, j}
  bool case_a_candidate = false;  // the avoiding subfamily is non-trivial
  std::optional<std::array<int, 4>> quadruple;
  bool quadruple_transversal = false;
};

struct StructureReport {
  std::vector<StructureEntry> entries;
};

StructureReport structure_report(const AdExtremisReport& r);

}  // namespace xfam
