// Factories for the named extremal families, with fixed canonical placements
// so that tests are reproducible: stars center at 1, special sets sit on
// prefix intervals.
#pragma once

#include <vector>

#include "xfam/family.hpp"

namespace xfam {

// All k-sets containing `center`; size C(n-1, k-1).
Family full_star(int n, int k, int center);

// {H : 1 in H, H meets [2, k+1]} plus the set [2, k+1]; n > 2k >= 4.
Family hilton_milner(int n, int k);

// {T : |T meet [3]| >= 2} for k = 3.
Family triangle_family(int n, int k = 3);

// G0 = {[l], [l+1, 2l]} and F0 = all k-sets meeting both; |F0| + |G0| = h(n,k,l).
CrossPair disjoint_pair_construction(int n, int k, int l);

// The initial extremal pair: g-side C([l+1], l), f-side {R : |R meet [l+1]| >= 2}.
CrossPair initial_extremal_pair(int n, int k, int l);

// The two extra optimum shapes that exist only at k = l = 2.
std::vector<CrossPair> k2_extra_optima(int n);

}  // namespace xfam
