#include "xfam/transversal.hpp"

#include <stdexcept>

#include "xfam/bounds.hpp"

namespace xfam {

Family transversal_family(const Family& f, int t, Mask ground, bool allow_empty_family) {
  if (f.members.empty() && !allow_empty_family)
    throw std::invalid_argument("transversal of empty family needs the explicit vacuous flag");
  if (t < 0 || t > popcount(ground))
    throw std::invalid_argument("transversal uniformity outside the ground set");
  std::vector<Mask> out;
  for (Mask cand : all_subsets_of_size(ground, t)) {
    bool hits_all = true;
    for (Mask m : f.members)
      if (!(cand & m)) {
        hits_all = false;
        break;
      }
    if (hits_all) out.push_back(cand);
  }
  return Family::make(f.n, t, std::move(out));
}

CrossPair saturate(const CrossPair& p) {
  if (!is_cross_intersecting(p)) throw std::invalid_argument("saturate requires a cross-intersecting pair");
  const Mask ground = full_mask(p.f.n);
  Family f = transversal_family(p.g, p.f.k, ground, true);
  Family g = transversal_family(f, p.g.k, ground, true);
  return CrossPair::make(std::move(f), std::move(g));
}

bool is_saturated(const CrossPair& p) {
  const Mask ground = full_mask(p.f.n);
  return p.f == transversal_family(p.g, p.f.k, ground, true) &&
         p.g == transversal_family(p.f, p.g.k, ground, true);
}

Family t2_graph(const Family& f) {
  return transversal_family(f, 2, full_mask(f.n), true);
}

TransversalCounts transversal_counts(const Family& g, Mask ground, int up_to) {
  if (g.members.empty()) throw std::invalid_argument("transversal counts need a nonempty family");
  for (Mask m : g.members)
    if (m & ~ground) throw std::invalid_argument("family member leaves the ground set");
  if (up_to < 1 || up_to > popcount(ground))
    throw std::invalid_argument("count range outside the ground set");
  TransversalCounts tc;
  tc.ground_size = popcount(ground);
  tc.counts.reserve(up_to);
  for (int r = 1; r <= up_to; ++r)
    tc.counts.push_back(static_cast<long long>(transversal_family(g, r, ground).size()));
  return tc;
}

bool noncover_lower_bound_check(const Family& g, int r) {
  const int l = g.k;
  if (l < 3) throw std::invalid_argument("no valid r below uniformity 3");
  if (r < 2 || r >= l) throw std::invalid_argument("r outside [2, l)");
  const Mask ground = prefix_mask(2 * l);
  for (Mask m : g.members)
    if (m & ~ground) throw std::invalid_argument("family must live inside [2l]");
  if (!is_non_trivial(g)) throw std::invalid_argument("check requires a non-trivial family");
  const long long tr = static_cast<long long>(transversal_family(g, r, ground).size());
  return binom(2 * l, r) - tr >= 2 * binom(l, r);
}

}  // namespace xfam
