#include "xfam/phi_map.hpp"

#include <algorithm>
#include <stdexcept>

#include "xfam/bounds.hpp"

namespace xfam {

int compute_p(Mask g, int k, int l) {
  if (popcount(g) != l) throw std::invalid_argument("compute_p needs an l-set");
  if (k < l) throw std::invalid_argument("compute_p needs k >= l");
  int best = 0;
  for (int p = 1; p <= l; ++p)
    if (popcount(g & prefix_mask(2 * p + k - l)) >= p) best = p;
  return best;
}

Mask phi_image(Mask g, int k, int l) {
  const int p = compute_p(g, k, l);
  if (k == l && p == 0)
    throw std::invalid_argument("phi undefined at p = 0 for equal uniformities; interchange the pair");
  return g ^ prefix_mask(2 * p + k - l);
}

PhiReport verify_phi_injection(const CrossPair& pair) {
  if (pair.f.members.empty() || pair.g.members.empty())
    throw std::invalid_argument("phi verification needs nonempty families");
  if (!is_initial(pair.f) || !is_initial(pair.g))
    throw std::invalid_argument("phi verification needs initial families");
  if (!is_cross_intersecting(pair)) throw std::invalid_argument("phi verification needs a cross-intersecting pair");

  PhiReport rep;
  const Family* fam_g = &pair.g;
  const Family* fam_f = &pair.f;
  if (pair.f.k == pair.g.k) {
    auto has_p0 = [&](const Family& fam) {
      for (Mask m : fam.members)
        if (compute_p(m, fam.k, fam.k) == 0) return true;
      return false;
    };
    if (has_p0(pair.g)) {
      if (has_p0(pair.f)) throw std::logic_error("both sides carry p = 0 members; pair cannot be cross-intersecting");
      std::swap(fam_g, fam_f);
      rep.swapped = true;
    }
  }
  const int k = fam_f->k;
  const int l = fam_g->k;
  const Mask lprefix = prefix_mask(l);

  std::vector<Mask> images;
  for (Mask g : fam_g->members) {
    PhiRecord rec;
    rec.g = g;
    rec.p = compute_p(g, k, l);
    rec.image = g ^ prefix_mask(2 * rec.p + k - l);
    if (popcount(rec.image) != k) {
      rep.sizes_ok = false;
      rep.size_violations.push_back(g);
    }
    if (fam_f->contains(rec.image)) {
      rep.disjoint_from_f = false;
      rep.f_hits.push_back(g);
    }
    if (g != lprefix && !(rec.image & lprefix)) {
      rep.meets_prefix = false;
      rep.prefix_violations.push_back(g);
    }
    images.push_back(rec.image);
    rep.records.push_back(rec);
  }
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b)
      if (images[a] == images[b]) {
        rep.injective = false;
        rep.collisions.emplace_back(fam_g->members[a], fam_g->members[b]);
      }
  return rep;
}

long long ft_counting_bound(const CrossPair& pair) {
  PhiReport rep = verify_phi_injection(pair);
  if (!rep.all_ok()) throw std::logic_error("injection certificate failed");
  const Family& f = rep.swapped ? pair.g : pair.f;
  const Family& g = rep.swapped ? pair.f : pair.g;
  const int k = f.k;
  const int l = g.k;
  const Mask lprefix = prefix_mask(l);
  const long long h_size = binom(f.n, k) - binom(f.n - l, k);

  for (Mask m : f.members)
    if (!(m & lprefix)) throw std::logic_error("f-member misses the l-prefix");
  for (const PhiRecord& rec : rep.records) {
    if (rec.g == lprefix) continue;
    if (!(rec.image & lprefix) || f.contains(rec.image))
      throw std::logic_error("injected image leaves the certificate region");
  }
  const long long total = static_cast<long long>(f.size() + g.size()) - 1;
  if (total > h_size) throw std::logic_error("certificate cardinality bound violated");
  return h_size;
}

}  // namespace xfam
