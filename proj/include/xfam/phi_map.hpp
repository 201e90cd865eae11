// The prefix symmetric-difference injection that certifies the nonempty-pair
// sum bound: p(G) is the largest p with |G meet [2p + k - l]| >= p and
// phi(G) = G symdiff [2p(G) + k - l].
#pragma once

#include <optional>
#include <vector>

#include "xfam/family.hpp"

namespace xfam {

// Largest p in [0, l] with |g meet [2p + k - l]| >= p.
int compute_p(Mask g, int k, int l);

// g symdiff [2p(g) + k - l]; always a k-set. For k = l the map needs p > 0,
// callers are expected to swap the pair roles first.
Mask phi_image(Mask g, int k, int l);

struct PhiRecord {
  Mask g = 0;
  int p = 0;
  Mask image = 0;
};

struct PhiReport {
  bool swapped = false;  // pair roles interchanged (k = l with a p = 0 member)
  std::vector<PhiRecord> records;
  bool sizes_ok = true;
  bool injective = true;
  bool disjoint_from_f = true;
  bool meets_prefix = true;
  std::vector<Mask> size_violations;
  std::vector<std::pair<Mask, Mask>> collisions;
  std::vector<Mask> f_hits;
  std::vector<Mask> prefix_violations;
  bool all_ok() const { return sizes_ok && injective && disjoint_from_f && meets_prefix; }
};

// Verifies, over an initial nonempty cross-intersecting pair: every image is a
// k-set, the map is injective with image disjoint from the partner family, and
// every image of g != [l] meets [l].
PhiReport verify_phi_injection(const CrossPair& p);

// |H| for H = {k-sets meeting [l]}, after certifying that F and the injected
// copy of G \ {[l]} fit inside H disjointly, so |F| + |G| - 1 <= |H|.
long long ft_counting_bound(const CrossPair& p);

}  // namespace xfam
