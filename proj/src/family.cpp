#include "xfam/family.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace xfam {

int popcount(Mask m) { return std::popcount(m); }

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& elems, int n) {
  Mask m = 0;
  for (int e : elems) {
    if (e < 1 || e > n) throw std::invalid_argument("element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
    Mask b = element_bit(e);
    if (m & b) throw std::invalid_argument("repeated element " + std::to_string(e));
    m |= b;
  }
  return m;
}

int min_element(Mask m) {
  if (!m) throw std::invalid_argument("min_element of empty set");
  return std::countr_zero(m) + 1;
}

Mask prefix_mask(int t) {
  if (t < 0) throw std::invalid_argument("negative prefix length");
  return full_mask(t);
}

Mask interval_mask(int a, int b) {
  if (a > b) return 0;
  return full_mask(b) & ~full_mask(a - 1);
}

std::string set_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

GroundContext::GroundContext(int n_, int k_, int l_) : n(n_), k(k_), l(l_) {
  if (n < 1 || n > kMaxGround) throw std::invalid_argument("ground size must be in [1,64]");
  if (k < 1 || k > n) throw std::invalid_argument("uniformity must satisfy 1 <= k <= n");
  if (l != 0 && (l < 1 || l > k)) throw std::invalid_argument("second uniformity must satisfy 1 <= l <= k");
}

Family Family::make(int n, int k, std::vector<Mask> members) {
  if (n < 1 || n > kMaxGround) throw std::invalid_argument("ground size must be in [1,64]");
  if (k < 0 || k > n) throw std::invalid_argument("uniformity must satisfy 0 <= k <= n");
  const Mask space = full_mask(n);
  for (Mask m : members) {
    if (m & ~space) throw std::invalid_argument("member uses elements above n");
    if (popcount(m) != k) throw std::invalid_argument("member has wrong cardinality");
  }
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::invalid_argument("duplicate member");
  Family f;
  f.n = n;
  f.k = k;
  f.members = std::move(members);
  return f;
}

Family Family::empty(int n, int k) { return make(n, k, {}); }

bool Family::contains(Mask m) const {
  return std::binary_search(members.begin(), members.end(), m);
}

CrossPair CrossPair::make(Family f, Family g) {
  if (f.n != g.n) throw std::invalid_argument("cross pair over mismatched ground sets");
  if (f.k < g.k) throw std::invalid_argument("cross pair requires f-uniformity >= g-uniformity");
  CrossPair p;
  p.f = std::move(f);
  p.g = std::move(g);
  return p;
}

std::vector<Mask> all_ksets(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack walks fixed-popcount masks in increasing order.
  Mask v = full_mask(k);
  const Mask limit = full_mask(n);
  while (v <= limit) {
    out.push_back(v);
    Mask t = v | (v - 1);
    if (t == ~Mask{0}) break;  // v already fills the top of the word
    Mask next = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    if (next <= v) break;
    v = next;
  }
  return out;
}

std::vector<Mask> all_subsets_of_size(Mask ground, int t) {
  std::vector<Mask> out;
  std::vector<int> elems = elements_of(ground);
  const int m = static_cast<int>(elems.size());
  if (t < 0 || t > m) return out;
  if (t == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    Mask s = 0;
    for (int i : idx) s |= element_bit(elems[i]);
    out.push_back(s);
    int i = t - 1;
    while (i >= 0 && idx[i] == m - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_intersecting(const Family& f) {
  for (std::size_t i = 0; i < f.members.size(); ++i)
    for (std::size_t j = i; j < f.members.size(); ++j)
      if (!(f.members[i] & f.members[j])) return false;
  return true;
}

bool is_cross_intersecting(const Family& f, const Family& g) {
  for (Mask a : f.members)
    for (Mask b : g.members)
      if (!(a & b)) return false;
  return true;
}

bool is_cross_intersecting(const CrossPair& p) { return is_cross_intersecting(p.f, p.g); }

Mask common_intersection(const Family& f) {
  if (f.members.empty()) throw std::invalid_argument("undefined intersection: empty family");
  Mask acc = ~Mask{0};
  for (Mask m : f.members) acc &= m;
  return acc & full_mask(f.n);
}

bool is_star(const Family& f) {
  return !f.members.empty() && common_intersection(f) != 0;
}

bool is_non_trivial(const Family& f) {
  return !f.members.empty() && common_intersection(f) == 0;
}

Restricted restrict_family(const Family& f, Mask take, Mask avoid) {
  if (take & avoid) throw std::invalid_argument("restriction sets must be disjoint");
  const Mask space = full_mask(f.n);
  if ((take | avoid) & ~space) throw std::invalid_argument("restriction sets outside ground set");
  std::vector<Mask> out;
  for (Mask m : f.members)
    if ((m & take) == take && !(m & avoid)) out.push_back(m & ~take);
  const int took = popcount(take);
  Restricted r;
  r.family = Family::make(f.n, took > f.k ? 0 : f.k - took, std::move(out));
  r.ground = space & ~(take | avoid);
  return r;
}

Family shadow(const Family& f, int t) {
  if (t < 0 || t > f.k) throw std::invalid_argument("shadow uniformity outside [0,k]");
  std::vector<Mask> out;
  for (Mask m : f.members)
    for (Mask s : all_subsets_of_size(m, t)) out.push_back(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Family::make(f.n, t, std::move(out));
}

Family shade(const Family& f, int t, Mask forbidden) {
  const Mask ground = full_mask(f.n) & ~forbidden;
  if (t < f.k) throw std::invalid_argument("shade uniformity below family uniformity");
  if (t > popcount(ground)) throw std::invalid_argument("shade uniformity exceeds available ground");
  for (Mask m : f.members)
    if (m & forbidden) throw std::invalid_argument("family member meets forbidden set");
  std::vector<Mask> out;
  for (Mask m : f.members)
    for (Mask extra : all_subsets_of_size(ground & ~m, t - f.k)) out.push_back(m | extra);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Family::make(f.n, t, std::move(out));
}

bool precedes(Mask a, Mask b) {
  if (popcount(a) != popcount(b)) throw std::invalid_argument("precedes requires equal cardinalities");
  // a precedes b iff every prefix [1,t] holds at least as many elements of a.
  int ca = 0, cb = 0;
  Mask bit = 1;
  for (int t = 0; t < kMaxGround; ++t, bit <<= 1) {
    ca += (a & bit) ? 1 : 0;
    cb += (b & bit) ? 1 : 0;
    if (ca < cb) return false;
  }
  return true;
}

bool is_initial(const Family& f) {
  // Closure under single-element decrements generates the whole order.
  for (Mask m : f.members) {
    for (int e : elements_of(m)) {
      if (e == 1) continue;
      Mask lower = element_bit(e - 1);
      if (m & lower) continue;
      Mask pred = (m & ~element_bit(e)) | lower;
      if (!f.contains(pred)) return false;
    }
  }
  return true;
}

Family complement_family(const Family& f) {
  const Mask space = full_mask(f.n);
  std::vector<Mask> out;
  out.reserve(f.members.size());
  for (Mask m : f.members) out.push_back(space & ~m);
  return Family::make(f.n, f.n - f.k, std::move(out));
}

}  // namespace xfam
