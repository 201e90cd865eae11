// Ground sets, bitmask k-sets and canonically ordered uniform families.
// Elements are 1-based in every external interface; bit positions are 0-based
// internally, so element e lives at bit e-1 of a single 64-bit word.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xfam {

using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

inline Mask element_bit(int e) { return Mask{1} << (e - 1); }

inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

int popcount(Mask m);

// Ascending 1-based element list of a mask.
std::vector<int> elements_of(Mask m);

// Mask of a 1-based element list; rejects out-of-range and repeated elements.
Mask mask_of(const std::vector<int>& elems, int n);

// Smallest element of a nonempty mask.
int min_element(Mask m);

// Prefix interval [1, t] as a mask (t = 0 gives the empty set).
Mask prefix_mask(int t);

// Interval [a, b] as a mask (empty when a > b).
Mask interval_mask(int a, int b);

std::string set_to_string(Mask m);

// (n, k[, l]) parameter block shared by pair-level operations.
struct GroundContext {
  int n = 0;
  int k = 0;
  int l = 0;  // 0 when no second uniformity is in play
  GroundContext() = default;
  GroundContext(int n_, int k_, int l_ = 0);
};

// A k-uniform family over [n]. Members are strictly increasing by mask value,
// so equal families compare bit-identical. Uniformity 0 is allowed (it shows
// up as the image of 0-shadows and full restrictions).
struct Family {
  int n = 0;
  int k = 0;
  std::vector<Mask> members;

  static Family make(int n, int k, std::vector<Mask> members);
  static Family empty(int n, int k);

  bool contains(Mask m) const;
  std::size_t size() const { return members.size(); }
  bool operator==(const Family&) const = default;
};

// A cross pair (F, G) with F the side of larger uniformity.
struct CrossPair {
  Family f;
  Family g;
  static CrossPair make(Family f, Family g);
  GroundContext context() const { return GroundContext(f.n, f.k, g.k); }
  bool operator==(const CrossPair&) const = default;
};

// All k-subsets of [n] in ascending mask order.
std::vector<Mask> all_ksets(int n, int k);

// All t-subsets of an arbitrary ground mask, ascending by mask value.
std::vector<Mask> all_subsets_of_size(Mask ground, int t);

// ---- predicates ---------------------------------------------------------

bool is_intersecting(const Family& f);
bool is_cross_intersecting(const Family& f, const Family& g);
bool is_cross_intersecting(const CrossPair& p);

// Intersection of all members; the empty family has no defined intersection
// and is rejected.
Mask common_intersection(const Family& f);

bool is_star(const Family& f);         // nonempty with a common element
bool is_non_trivial(const Family& f);  // nonempty with empty common intersection

// ---- set algebra --------------------------------------------------------

// F(A, B-bar) = { F \ A : A subset of F in f, F disjoint from B }, a family of
// uniformity k - |A| living on the ground set [n] \ (A u B).
struct Restricted {
  Family family;
  Mask ground;
};
Restricted restrict_family(const Family& f, Mask take, Mask avoid);

// All t-sets contained in some member.
Family shadow(const Family& f, int t);

// All t-sets over [n] \ forbidden containing some member.
Family shade(const Family& f, int t, Mask forbidden);

// Shifting partial order: with both sets sorted ascending, a_i <= b_i for all i.
bool precedes(Mask a, Mask b);

// Down-set of the precedes order.
bool is_initial(const Family& f);

Family complement_family(const Family& f);

}  // namespace xfam
