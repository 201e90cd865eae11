// Closed-form extremal bounds, profile vectors, normalized densities and the
// combinatorial inequality checkers. Everything here is pure and exact.
#pragma once

#include <vector>

#include "xfam/family.hpp"
#include "xfam/rational.hpp"

namespace xfam {

// C(n, k) as an exact 64-bit integer; 0 whenever k < 0, k > n or n < 0.
// Throws if the value would not fit in 64 bits.
long long binom(long long n, long long k);

// Max size of an intersecting k-family, n >= 2k.
long long ekr_bound(int n, int k);

// Max size of an intersecting non-trivial k-family, n > 2k.
long long hm_bound(int n, int k);

// Max of |F| + |G| over non-trivial cross-intersecting k-families, n > 2k.
long long h_nk(int n, int k);

// Max of |F| + |G| over non-trivial cross-intersecting initial k-families, n >= 2k.
long long initial_bound(int n, int k);

// Max of |F| + |G| over nonempty cross-intersecting (k, l)-families, n >= k + l.
long long ft_bound(int n, int k, int l);

// Max of |F| + |G| over non-trivial cross-intersecting (k, l)-families.
long long h_nkl(int n, int k, int l);

// The initial-family analogue of h_nkl.
long long g_nkl(int n, int k, int l);

// Conjectured max of |F| * |G| over non-trivial cross-intersecting k-families;
// proved for k >= 6, n > 9k and for k = 2.
long long product_bound(int n, int k);
bool product_bound_in_theorem_range(int n, int k);

// f_i = |{F in family : |F meet [window]| = i}| for i = 0..k.
struct ProfileVector {
  std::vector<long long> counts;
  long long total() const;
};
ProfileVector profile(const Family& f, int window);

// |F(P, complement-of-window-minus-P)| / C(n - q, k - |P|), exact.
struct NormalizedDensity {
  Rational value;
  Mask p_set = 0;
  int window = 0;
};
NormalizedDensity alpha_density(const Family& f, Mask p, int window);

// Density monotonicity along P subset R inside the window, for initial families.
bool check_initial_monotonicity(const Family& f, Mask p, Mask r, int window);

// |A|/C(m,a) + |B|/C(m,b) <= 1 for families over a common m-element ground set.
bool check_cross_density(const Family& a, const Family& b);

// Symmetric sequence, nondecreasing up to the middle, nonnegative entries.
struct AppropriateSequence {
  std::vector<Rational> entries;
  static AppropriateSequence make(std::vector<Rational> entries);
  static AppropriateSequence zero_one_block(int length, int first_one, int last_one);
  int degree() const { return static_cast<int>(entries.size()) - 1; }
};

// sum_i a_{i+u} b_i <= sum_i a_{i+v} b_i for 0 <= u < v, u + v <= q - p.
bool check_appropriate_inequality(const AppropriateSequence& a, const AppropriateSequence& b,
                                  int u, int v);

// Full-chain counting identity over the window [l+1]: the weighted alpha/beta
// double sum equals (l+1)! * (|F| + |G|). Holds whenever every member of F
// meets [l+1] (the cross-intersecting hypotheses guarantee that).
bool check_chain_identity(const CrossPair& p, int l);

// sum_{l+1-t <= i <= t} C(l+1,i) C(n-l-1,k-i) >= same sum with C(n-l-1,l-i).
bool check_binomial_sum_inequality(int n, int k, int l, int t);

// Four-term profile bound over the window [k+1] for disjoint equal-size traces
// P and Q:  |F(P)| + |G(Q)| + |G(W\P)| + |F(W\Q)| <= C(n-k-1,k-i) + C(n-k-1,i-1).
// alt_reading_differs reports whether replacing the second RHS binomial by
// C(n-k-i, i-1) would change the verdict.
struct FourTermBound {
  bool holds = false;
  bool alt_reading_differs = false;
};
FourTermBound check_four_term_profile_bound(const CrossPair& p, Mask pset, Mask qset);

}  // namespace xfam
