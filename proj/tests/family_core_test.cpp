#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "test_util.hpp"
#include "xfam/bounds.hpp"
#include "xfam/constructions.hpp"
#include "xfam/downset.hpp"
#include "xfam/family.hpp"
#include "xfam/rational.hpp"

using namespace xfam;

namespace {

Family fam(int n, int k, std::vector<std::vector<int>> sets) {
  std::vector<Mask> ms;
  for (auto& s : sets) ms.push_back(mask_of(s, n));
  return Family::make(n, k, std::move(ms));
}

}  // namespace

TEST_CASE("layer enumeration at the word boundary") {
  CHECK(all_ksets(64, 1).size() == 64);
  CHECK(all_ksets(64, 63).size() == 64);
  CHECK(all_ksets(64, 64).size() == 1);
  CHECK(all_ksets(10, 3).size() == 120);
  auto layer = all_ksets(6, 3);
  CHECK(layer.size() == 20);
  CHECK(std::is_sorted(layer.begin(), layer.end()));
}

TEST_CASE("mask helpers round-trip") {
  CHECK(elements_of(mask_of({1, 4, 6}, 6)) == std::vector<int>{1, 4, 6});
  CHECK(popcount(full_mask(7)) == 7);
  CHECK(interval_mask(2, 4) == (element_bit(2) | element_bit(3) | element_bit(4)));
  CHECK(interval_mask(4, 3) == 0);
  CHECK(min_element(mask_of({3, 5}, 6)) == 3);
  CHECK_THROWS_AS(mask_of({0, 2}, 6), std::invalid_argument);
  CHECK_THROWS_AS(mask_of({2, 2}, 6), std::invalid_argument);
}

TEST_CASE("family construction canonicalizes and validates") {
  Family f = fam(5, 2, {{2, 3}, {1, 2}});
  CHECK(f.members.size() == 2);
  CHECK(f.members[0] < f.members[1]);
  CHECK_THROWS_AS(Family::make(5, 2, {mask_of({1, 2}, 5), mask_of({1, 2}, 5)}), std::invalid_argument);
  CHECK_THROWS_AS(Family::make(5, 2, {mask_of({1, 2, 3}, 5)}), std::invalid_argument);
  CHECK_THROWS_AS(CrossPair::make(fam(5, 2, {{1, 2}}), fam(5, 3, {{1, 2, 3}})), std::invalid_argument);
}

TEST_CASE("is_intersecting") {
  CHECK(is_intersecting(fam(4, 2, {{1, 2}, {1, 3}})));
  CHECK_FALSE(is_intersecting(fam(4, 2, {{1, 2}, {3, 4}})));
  CHECK(is_intersecting(full_star(6, 3, 1)));
  CHECK(is_intersecting(Family::empty(4, 2)));
}

TEST_CASE("is_cross_intersecting") {
  Family f = fam(6, 3, {{1, 2, 3}, {4, 5, 6}});
  std::vector<Mask> meeting;
  for (Mask m : all_ksets(6, 3))
    if ((m & f.members[0]) && (m & f.members[1])) meeting.push_back(m);
  CHECK(is_cross_intersecting(f, Family::make(6, 3, meeting)));
  CHECK_FALSE(is_cross_intersecting(fam(4, 2, {{1, 2}}), fam(4, 2, {{3, 4}})));
  CHECK(is_cross_intersecting(Family::empty(4, 2), fam(4, 2, {{3, 4}})));
}

TEST_CASE("common intersection, stars and non-triviality") {
  CHECK(common_intersection(fam(4, 2, {{1, 2}, {1, 3}})) == element_bit(1));
  CHECK(common_intersection(fam(4, 2, {{1, 2}, {2, 3}, {1, 3}})) == 0);
  CHECK(common_intersection(fam(3, 3, {{1, 2, 3}})) == mask_of({1, 2, 3}, 3));
  CHECK_THROWS_AS(common_intersection(Family::empty(4, 2)), std::invalid_argument);
  // Singleton families are stars; the empty family is neither star nor non-trivial.
  CHECK(is_star(fam(3, 3, {{1, 2, 3}})));
  CHECK_FALSE(is_non_trivial(Family::empty(4, 2)));
  CHECK_FALSE(is_star(Family::empty(4, 2)));
  CHECK(is_non_trivial(fam(4, 2, {{1, 2}, {2, 3}, {1, 3}})));
}

TEST_CASE("restriction") {
  Family f = fam(5, 3, {{1, 2, 3}, {1, 4, 5}});
  Restricted r = restrict_family(f, element_bit(1), element_bit(2));
  CHECK(r.family.members == std::vector<Mask>{mask_of({4, 5}, 5)});
  CHECK(r.family.k == 2);
  CHECK(popcount(r.ground) == 3);

  Restricted identity = restrict_family(f, 0, 0);
  CHECK(identity.family == f);

  CHECK_THROWS_AS(restrict_family(f, element_bit(1), element_bit(1)), std::invalid_argument);

  // F(A, A u B) = F(A, B-bar): both spellings name the same trace family.
  Restricted direct = restrict_family(f, element_bit(1), element_bit(2));
  CHECK(direct.family.size() == 1);
  CHECK(restrict_family(f, element_bit(1), element_bit(2)).family == direct.family);
}

TEST_CASE("shadow") {
  Family f = fam(4, 3, {{1, 2, 3}});
  CHECK(shadow(f, 2) == fam(4, 2, {{1, 2}, {1, 3}, {2, 3}}));
  Family g = fam(5, 3, {{1, 2, 3}, {2, 4, 5}});
  CHECK(shadow(g, 3) == g);
  Family s0 = shadow(g, 0);
  CHECK(s0.k == 0);
  CHECK(s0.members == std::vector<Mask>{0});
  CHECK_THROWS_AS(shadow(g, 4), std::invalid_argument);
}

TEST_CASE("shade") {
  Family f = Family::make(5, 1, {element_bit(3)});
  Family sh = shade(f, 2, mask_of({1, 2}, 5));
  CHECK(sh == fam(5, 2, {{3, 4}, {3, 5}}));
  Family g = fam(5, 2, {{2, 3}});
  CHECK(shade(g, 2, 0) == g);
  CHECK_THROWS_AS(shade(g, 5, mask_of({1, 4}, 5)), std::invalid_argument);
}

TEST_CASE("shade obeys the normalized upper-shadow lower bound") {
  // |shade to (m+1)-sets| >= |f| * (M - m) / (m + 1) over an M-element ground set.
  testutil::Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.uniform(4, 8);
    int m = rng.uniform(1, n - 2);
    Family f = testutil::random_family(rng, n, m, 10);
    Family up = shade(f, m + 1, 0);
    long long lhs = static_cast<long long>(up.size()) * (m + 1);
    long long rhs = static_cast<long long>(f.size()) * (n - m);
    CHECK(lhs >= rhs);
  }
}

TEST_CASE("precedes matches the element-wise oracle and is a partial order") {
  CHECK(precedes(mask_of({1, 3}, 4), mask_of({2, 4}, 4)));
  CHECK_FALSE(precedes(mask_of({1, 4}, 4), mask_of({2, 3}, 4)));
  CHECK(precedes(mask_of({2, 3}, 4), mask_of({2, 3}, 4)));
  CHECK_THROWS_AS(precedes(mask_of({1}, 4), mask_of({1, 2}, 4)), std::invalid_argument);

  for (int n = 4; n <= 7; ++n)
    for (int k = 1; k <= 3; ++k) {
      auto space = all_ksets(n, k);
      for (Mask a : space)
        for (Mask b : space) {
          CHECK(precedes(a, b) == testutil::oracle_precedes(a, b));
          if (precedes(a, b) && precedes(b, a)) CHECK(a == b);  // antisymmetry
          for (Mask c : space)
            if (precedes(a, b) && precedes(b, c)) CHECK(precedes(a, c));  // transitivity
        }
    }
}

TEST_CASE("is_initial") {
  auto full_low = Family::make(5, 3, all_subsets_of_size(prefix_mask(4), 3));
  CHECK(is_initial(full_low));
  CHECK(is_initial(full_star(6, 3, 1)));
  CHECK_FALSE(is_initial(fam(4, 2, {{2, 3}})));

  testutil::Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Family f = testutil::random_family(rng, rng.uniform(4, 7), rng.uniform(1, 3), 12);
    CHECK(is_initial(f) == testutil::oracle_is_initial(f));
  }
}

TEST_CASE("initiality is preserved by shadows (exhaustive over initial families, n <= 6)") {
  for (int n = 4; n <= 6; ++n)
    for (int k = 2; k <= 3; ++k) {
      if (k > n / 2 + 1) continue;
      ShiftPoset poset = ShiftPoset::make(n, k);
      poset.for_each_downset([&](std::uint64_t bits) {
        Family f = poset.family_from_bits(bits);
        for (int t = 1; t <= k; ++t) CHECK(is_initial(shadow(f, t)));
      });
    }
}

TEST_CASE("complement family is an involution") {
  Family f = fam(4, 2, {{1, 2}});
  CHECK(complement_family(f) == fam(4, 2, {{3, 4}}));
  testutil::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Family g = testutil::random_family(rng, rng.uniform(4, 8), rng.uniform(1, 3), 10);
    CHECK(complement_family(complement_family(g)) == g);
  }
  Family full = Family::make(5, 2, all_ksets(5, 2));
  CHECK(complement_family(full) == Family::make(5, 3, all_ksets(5, 3)));
}

TEST_CASE("cross-intersecting pairs complement to antichains") {
  testutil::Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    CrossPair p = testutil::random_ci_pair(rng, 8);
    if (p.f.n < p.f.k + p.g.k) continue;
    Family gc = complement_family(p.g);
    // No member of f sits inside a complement, so the k-shadow of the
    // complements avoids f entirely.
    for (Mask a : p.f.members)
      for (Mask b : gc.members) CHECK((a & ~b) != 0);
    Family shadow_gc = shadow(gc, p.f.k);
    for (Mask s : shadow_gc.members) CHECK_FALSE(p.f.contains(s));
  }
}

TEST_CASE("normalized shadow inequality on random families") {
  testutil::Rng rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = rng.uniform(4, 10);
    int k = rng.uniform(1, std::min(5, n / 2 + 1));
    Family f = testutil::random_family(rng, n, k, 14);
    int t = rng.uniform(0, k);
    Family sh = shadow(f, t);
    Rational lhs = Rational::make(Int128(sh.size()), Int128(binom(n, t)));
    Rational rhs = Rational::make(Int128(f.size()), Int128(binom(n, k)));
    CHECK(rhs <= lhs);
  }
}

TEST_CASE("restriction size and uniformity bookkeeping") {
  testutil::Rng rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.uniform(5, 8);
    int k = rng.uniform(2, 3);
    Family f = testutil::random_family(rng, n, k, 12);
    int asize = rng.uniform(0, k);
    auto elems = testutil::sample_distinct(rng, all_ksets(n, 1), asize + rng.uniform(0, 2));
    Mask a = 0, b = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) (i < static_cast<std::size_t>(asize) ? a : b) |= elems[i];
    Restricted r = restrict_family(f, a, b);
    CHECK(r.family.k == k - popcount(a));
    CHECK(popcount(r.ground) == n - popcount(a) - popcount(b));
    CHECK(r.family.size() <= f.size());
  }
}
