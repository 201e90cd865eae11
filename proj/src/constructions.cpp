#include "xfam/constructions.hpp"

#include <stdexcept>

namespace xfam {

Family full_star(int n, int k, int center) {
  if (center < 1 || center > n) throw std::invalid_argument("star center outside [1,n]");
  if (k < 1 || k > n) throw std::invalid_argument("uniformity outside [1,n]");
  const Mask c = element_bit(center);
  std::vector<Mask> out;
  for (Mask rest : all_subsets_of_size(full_mask(n) & ~c, k - 1)) out.push_back(rest | c);
  return Family::make(n, k, std::move(out));
}

Family hilton_milner(int n, int k) {
  if (k < 2 || n <= 2 * k) throw std::invalid_argument("requires n > 2k >= 4");
  const Mask one = element_bit(1);
  const Mask tail = interval_mask(2, k + 1);
  std::vector<Mask> out;
  for (Mask m : all_ksets(n, k))
    if ((m & one) && (m & tail)) out.push_back(m);
  out.push_back(tail);
  return Family::make(n, k, std::move(out));
}

Family triangle_family(int n, int k) {
  if (k != 3) throw std::invalid_argument("triangle family is defined for k = 3");
  if (n < 3) throw std::invalid_argument("triangle family needs n >= 3");
  const Mask base = prefix_mask(3);
  std::vector<Mask> out;
  for (Mask m : all_ksets(n, 3))
    if (popcount(m & base) >= 2) out.push_back(m);
  return Family::make(n, 3, std::move(out));
}

CrossPair disjoint_pair_construction(int n, int k, int l) {
  if (k < l || l < 1) throw std::invalid_argument("requires k >= l >= 1");
  if (n < k + l) throw std::invalid_argument("requires n >= k + l");
  const Mask u = prefix_mask(l);
  const Mask v = interval_mask(l + 1, 2 * l);
  Family g = Family::make(n, l, {u, v});
  std::vector<Mask> fm;
  for (Mask m : all_ksets(n, k))
    if ((m & u) && (m & v)) fm.push_back(m);
  return CrossPair::make(Family::make(n, k, std::move(fm)), std::move(g));
}

CrossPair initial_extremal_pair(int n, int k, int l) {
  if (k < l || l < 1) throw std::invalid_argument("requires k >= l >= 1");
  if (n < k + l) throw std::invalid_argument("requires n >= k + l");
  const Mask window = prefix_mask(l + 1);
  std::vector<Mask> gm;
  for (Mask m : all_subsets_of_size(window, l)) gm.push_back(m);
  std::vector<Mask> fm;
  for (Mask m : all_ksets(n, k))
    if (popcount(m & window) >= 2) fm.push_back(m);
  return CrossPair::make(Family::make(n, k, std::move(fm)), Family::make(n, l, std::move(gm)));
}

std::vector<CrossPair> k2_extra_optima(int n) {
  if (n < 4) throw std::invalid_argument("extra optima need n >= 4");
  auto pair_set = [&](std::vector<std::vector<int>> sets) {
    std::vector<Mask> ms;
    for (auto& s : sets) ms.push_back(mask_of(s, n));
    return Family::make(n, 2, std::move(ms));
  };
  Family triangle = pair_set({{1, 2}, {1, 3}, {2, 3}});
  Family f2 = pair_set({{1, 2}, {2, 3}, {3, 4}});
  Family g2 = pair_set({{1, 3}, {2, 3}, {2, 4}});
  std::vector<CrossPair> out;
  out.push_back(CrossPair::make(triangle, triangle));
  out.push_back(CrossPair::make(std::move(f2), std::move(g2)));
  return out;
}

}  // namespace xfam
