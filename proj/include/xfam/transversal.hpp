// Transversal families T^(t), saturation closure of cross pairs, the T_2
// cover graph and r-transversal counts.
#pragma once

#include <vector>

#include "xfam/family.hpp"

namespace xfam {

// All t-subsets of `ground` meeting every member of f. An empty input family
// would make every t-set a transversal vacuously; that convention has to be
// requested explicitly, otherwise the call is rejected.
Family transversal_family(const Family& f, int t, Mask ground, bool allow_empty_family = false);

// Closure to a saturated pair: F <- T^(k)(G), then G <- T^(l)(F).
CrossPair saturate(const CrossPair& p);

// F = T^(k)(G) and G = T^(l)(F).
bool is_saturated(const CrossPair& p);

// The cover graph: all pairs {i,j} met by every member. This is exactly
// T^(2) over the full ground set, vacuous convention included.
Family t2_graph(const Family& f);

// t_r = |T_r| for r = 1..up_to over the given ground set.
struct TransversalCounts {
  std::vector<long long> counts;  // counts[r-1] = t_r
  int ground_size = 0;
  long long t(int r) const { return counts.at(r - 1); }
};
TransversalCounts transversal_counts(const Family& g, Mask ground, int up_to);

// For non-trivial g inside [2l]: C(2l,r) - t_r >= 2*C(l,r), 2 <= r < l.
bool noncover_lower_bound_check(const Family& g, int r);

}  // namespace xfam
