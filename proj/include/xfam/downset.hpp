// Down-set (initial family) machinery over the shifting partial order on
// C([n], k), for ground spaces of at most 64 k-sets so that subfamilies are
// single-word index masks.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "xfam/family.hpp"

namespace xfam {

struct ShiftPoset {
  int n = 0;
  int k = 0;
  std::vector<Mask> sets;               // mask order, a linear extension of precedes
  std::vector<std::uint64_t> preds;     // preds[i] = strict predecessors of sets[i], as index bits

  static ShiftPoset make(int n, int k);

  std::size_t size() const { return sets.size(); }

  bool is_downset(std::uint64_t bits) const;

  // Largest down-set contained in the given index set.
  std::uint64_t initial_closure(std::uint64_t bits) const;

  Family family_from_bits(std::uint64_t bits) const;
  std::uint64_t bits_from_family(const Family& f) const;

  // Calls fn on every down-set (the empty one included) exactly once.
  void for_each_downset(const std::function<void(std::uint64_t)>& fn) const;

  std::uint64_t count_downsets() const;
};

// Largest initial subfamily: the members whose whole down-cone stays inside.
// Needs C(n,k) <= 64.
Family largest_initial_subfamily(const Family& f);

}  // namespace xfam
