#include "xfam/downset.hpp"

#include <stdexcept>

namespace xfam {

ShiftPoset ShiftPoset::make(int n, int k) {
  ShiftPoset p;
  p.n = n;
  p.k = k;
  p.sets = all_ksets(n, k);
  const std::size_t m = p.sets.size();
  if (m > 64) throw std::invalid_argument("poset too large for single-word index masks");
  p.preds.assign(m, 0);
  // Mask order is a linear extension: a strict predecessor has a smaller mask.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (precedes(p.sets[j], p.sets[i])) p.preds[i] |= std::uint64_t{1} << j;
  return p;
}

bool ShiftPoset::is_downset(std::uint64_t bits) const {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if ((bits >> i) & 1)
      if (preds[i] & ~bits) return false;
  return true;
}

std::uint64_t ShiftPoset::initial_closure(std::uint64_t bits) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if ((bits >> i) & 1)
        if (preds[i] & ~bits) {
          bits &= ~(std::uint64_t{1} << i);
          changed = true;
        }
  }
  return bits;
}

Family ShiftPoset::family_from_bits(std::uint64_t bits) const {
  std::vector<Mask> ms;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if ((bits >> i) & 1) ms.push_back(sets[i]);
  return Family::make(n, k, std::move(ms));
}

std::uint64_t ShiftPoset::bits_from_family(const Family& f) const {
  std::uint64_t bits = 0;
  for (Mask m : f.members) {
    auto it = std::lower_bound(sets.begin(), sets.end(), m);
    if (it == sets.end() || *it != m) throw std::invalid_argument("family member outside the poset");
    bits |= std::uint64_t{1} << (it - sets.begin());
  }
  return bits;
}

void ShiftPoset::for_each_downset(const std::function<void(std::uint64_t)>& fn) const {
  const std::size_t m = sets.size();
  // DFS over the linear extension; an element may be included only when all
  // of its predecessors already are.
  std::vector<std::pair<std::size_t, std::uint64_t>> stack;
  stack.emplace_back(0, 0);
  while (!stack.empty()) {
    auto [idx, bits] = stack.back();
    stack.pop_back();
    if (idx == m) {
      fn(bits);
      continue;
    }
    stack.emplace_back(idx + 1, bits);
    if ((preds[idx] & ~bits) == 0)
      stack.emplace_back(idx + 1, bits | (std::uint64_t{1} << idx));
  }
}

std::uint64_t ShiftPoset::count_downsets() const {
  std::uint64_t c = 0;
  for_each_downset([&](std::uint64_t) { ++c; });
  return c;
}

Family largest_initial_subfamily(const Family& f) {
  ShiftPoset poset = ShiftPoset::make(f.n, f.k);
  return poset.family_from_bits(poset.initial_closure(poset.bits_from_family(f)));
}

}  // namespace xfam
