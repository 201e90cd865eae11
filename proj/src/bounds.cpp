#include "xfam/bounds.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace xfam {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Exact-trace table: counts[s] = |{F : F meet [window] = s}| for every subset
// s of the prefix window. Window sizes stay tiny (<= 11) in all callers.
std::vector<long long> trace_table(const Family& f, int window) {
  const Mask w = prefix_mask(window);
  std::vector<long long> counts(std::size_t{1} << window, 0);
  for (Mask m : f.members) ++counts[m & w];
  return counts;
}

}  // namespace

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > Int128(std::numeric_limits<long long>::max()))
      throw std::overflow_error("binomial exceeds 64 bits");
  }
  return static_cast<long long>(r);
}

long long ekr_bound(int n, int k) {
  require(k >= 2 && n >= 2 * k, "ekr bound requires n >= 2k >= 4");
  return binom(n - 1, k - 1);
}

long long hm_bound(int n, int k) {
  require(k >= 2 && n > 2 * k, "hm bound requires n > 2k >= 4");
  return binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1;
}

long long h_nk(int n, int k) {
  require(k >= 2 && n > 2 * k, "h(n,k) requires n > 2k >= 4");
  return 2 + binom(n, k) - 2 * binom(n - k, k) + binom(n - 2 * k, k);
}

long long initial_bound(int n, int k) {
  require(k >= 2 && n >= 2 * k, "initial bound requires n >= 2k >= 4");
  long long s = k + 1;
  for (int i = 2; i <= k; ++i) s += binom(k + 1, i) * binom(n - k - 1, k - i);
  return s;
}

long long ft_bound(int n, int k, int l) {
  require(k >= l && l > 0, "ft bound requires k >= l > 0");
  require(n >= k + l, "ft bound requires n >= k + l");
  return binom(n, k) - binom(n - l, k) + 1;
}

long long h_nkl(int n, int k, int l) {
  require(k >= l && l >= 1, "h(n,k,l) requires k >= l >= 1");
  require(n >= k + l, "h(n,k,l) requires n >= k + l");
  return binom(n, k) - 2 * binom(n - l, k) + binom(n - 2 * l, k) + 2;
}

long long g_nkl(int n, int k, int l) {
  require(k >= l && l >= 1, "g(n,k,l) requires k >= l >= 1");
  require(n >= k + l, "g(n,k,l) requires n >= k + l");
  long long s = l + 1;
  for (int i = 2; i <= l + 1; ++i) s += binom(l + 1, i) * binom(n - l - 1, k - i);
  return s;
}

long long product_bound(int n, int k) {
  require(k >= 2 && n >= 2 * k, "product bound requires n >= 2k >= 4");
  long long hm = binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1;
  return hm * hm;
}

bool product_bound_in_theorem_range(int n, int k) { return k >= 6 && n > 9 * k; }

long long ProfileVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0LL);
}

ProfileVector profile(const Family& f, int window) {
  require(window >= 1 && window <= f.n, "profile window outside [1,n]");
  ProfileVector pv;
  pv.counts.assign(f.k + 1, 0);
  const Mask w = prefix_mask(window);
  for (Mask m : f.members) ++pv.counts[popcount(m & w)];
  return pv;
}

NormalizedDensity alpha_density(const Family& f, Mask p, int window) {
  require(window >= 1 && window <= f.n, "density window outside [1,n]");
  const Mask w = prefix_mask(window);
  require((p & ~w) == 0, "density trace must lie inside the window");
  require(popcount(p) <= f.k, "density trace larger than uniformity");
  const long long den = binom(f.n - window, f.k - popcount(p));
  if (den == 0) throw std::invalid_argument("density denominator vanishes");
  Restricted r = restrict_family(f, p, w & ~p);
  NormalizedDensity d;
  d.value = Rational::make(Int128(r.family.size()), Int128(den));
  d.p_set = p;
  d.window = window;
  return d;
}

bool check_initial_monotonicity(const Family& f, Mask p, Mask r, int window) {
  if (!is_initial(f)) throw std::invalid_argument("monotonicity check requires an initial family");
  require((p & ~r) == 0, "P must be a subset of R");
  require(popcount(r) <= f.k, "R larger than uniformity");
  return alpha_density(f, p, window).value <= alpha_density(f, r, window).value;
}

bool check_cross_density(const Family& a, const Family& b) {
  require(a.n == b.n, "cross density requires a common ground set");
  require(a.n >= a.k + b.k, "cross density requires m >= a + b");
  Rational lhs = Rational::make(Int128(a.size()), Int128(binom(a.n, a.k))) +
                 Rational::make(Int128(b.size()), Int128(binom(b.n, b.k)));
  return lhs <= Rational(1);
}

AppropriateSequence AppropriateSequence::make(std::vector<Rational> entries) {
  require(!entries.empty(), "appropriate sequence must be nonempty");
  const int m = static_cast<int>(entries.size()) - 1;
  for (int i = 0; i <= m; ++i) {
    require(Rational(0) <= entries[i], "appropriate sequence must be nonnegative");
    require(entries[i] == entries[m - i], "appropriate sequence must be symmetric");
  }
  for (int i = 0; i + 1 <= m / 2; ++i)
    require(entries[i] <= entries[i + 1], "appropriate sequence must be nondecreasing to the middle");
  AppropriateSequence s;
  s.entries = std::move(entries);
  return s;
}

AppropriateSequence AppropriateSequence::zero_one_block(int length, int first_one, int last_one) {
  std::vector<Rational> e(length, Rational(0));
  for (int i = first_one; i <= last_one && i < length; ++i)
    if (i >= 0) e[i] = Rational(1);
  return make(std::move(e));
}

bool check_appropriate_inequality(const AppropriateSequence& a, const AppropriateSequence& b,
                                  int u, int v) {
  const int q = a.degree();
  const int p = b.degree();
  require(q > p + 1, "appropriate inequality requires q > p + 1");
  require(0 <= u && u < v, "appropriate inequality requires 0 <= u < v");
  require(u + v <= q - p, "appropriate inequality requires u + v <= q - p");
  Rational lhs(0), rhs(0);
  for (int i = 0; i <= p; ++i) {
    lhs = lhs + a.entries[i + u] * b.entries[i];
    rhs = rhs + a.entries[i + v] * b.entries[i];
  }
  return lhs <= rhs;
}

bool check_chain_identity(const CrossPair& pr, int l) {
  require(l == pr.g.k, "chain identity window must match the g-side uniformity");
  require(l + 1 <= 8, "chain identity enumerates (l+1)! chains; l + 1 <= 8 required");
  require(!pr.g.members.empty(), "chain identity undefined for empty g");
  require(l + 1 <= pr.f.n, "window exceeds ground set");
  const int w = l + 1;
  const int n = pr.f.n;
  const int k = pr.f.k;
  const std::vector<long long> fcount = trace_table(pr.f, w);
  const std::vector<long long> gcount = trace_table(pr.g, w);

  // Term for trace A of size i: C(w,i) * C(n-w, k-i) * alpha_A with the
  // normalizing binomial cancelled against alpha's denominator, so each term
  // is C(w,i) * |F(A, window)|; same on the beta side with C(w, w-i).
  Rational lhs(0);
  std::vector<int> perm(w);
  for (int i = 0; i < w; ++i) perm[i] = i + 1;
  do {
    Rational chain(0);
    Mask a = 0;
    for (int i = 1; i <= w; ++i) {
      a |= element_bit(perm[i - 1]);
      const Mask bset = prefix_mask(w) & ~a;
      const long long fa = fcount[a];
      const long long gb = gcount[bset];
      if (fa) {
        const long long den = binom(n - w, k - i);
        chain = chain + Rational(binom(w, i)) * Rational(den) *
                            Rational::make(Int128(fa), Int128(den));
      }
      if (gb) {
        const long long den = binom(n - w, i - 1);
        chain = chain + Rational(binom(w, w - i)) * Rational(den) *
                            Rational::make(Int128(gb), Int128(den));
      }
    }
    lhs = lhs + chain;
  } while (std::next_permutation(perm.begin(), perm.end()));

  long long fact = 1;
  for (int i = 2; i <= w; ++i) fact *= i;
  Rational rhs = Rational(fact) * Rational(static_cast<long long>(pr.f.size() + pr.g.size()));
  return lhs == rhs;
}

bool check_binomial_sum_inequality(int n, int k, int l, int t) {
  require(k >= l && l >= 2, "binomial sum inequality requires k >= l >= 2");
  require(2 * t >= l + 1 && t <= l - 1, "t outside [(l+1)/2, l-1]");
  require(n >= k + l + 1, "binomial sum inequality requires n >= k + l + 1");
  long long lhs = 0, rhs = 0;
  for (int i = l + 1 - t; i <= t; ++i) {
    lhs += binom(l + 1, i) * binom(n - l - 1, k - i);
    rhs += binom(l + 1, i) * binom(n - l - 1, l - i);
  }
  return lhs >= rhs;
}

FourTermBound check_four_term_profile_bound(const CrossPair& pr, Mask pset, Mask qset) {
  const int k = pr.f.k;
  require(pr.g.k == k, "four-term bound is for equal uniformities");
  const int w = k + 1;
  require(w <= pr.f.n, "window exceeds ground set");
  require((pset & qset) == 0, "P and Q must be disjoint");
  const int i = popcount(pset);
  require(popcount(qset) == i && i >= 2, "P and Q must be equal-size traces, |P| >= 2");
  const Mask window = prefix_mask(w);
  require(((pset | qset) & ~window) == 0, "traces must lie in the window");

  const std::vector<long long> fcount = trace_table(pr.f, w);
  const std::vector<long long> gcount = trace_table(pr.g, w);
  const long long lhs = fcount[pset] + gcount[qset] + gcount[window & ~pset] + fcount[window & ~qset];
  const long long rhs_display = binom(pr.f.n - k - 1, k - i) + binom(pr.f.n - k - 1, i - 1);
  const long long rhs_alt = binom(pr.f.n - k - 1, k - i) + binom(pr.f.n - k - i, i - 1);
  FourTermBound out;
  out.holds = lhs <= rhs_display;
  out.alt_reading_differs = (lhs <= rhs_alt) != out.holds;
  return out;
}

}  // namespace xfam
