#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"
#include "xfam/bounds.hpp"
#include "xfam/constructions.hpp"
#include "xfam/family.hpp"
#include "xfam/search.hpp"
#include "xfam/transversal.hpp"

using namespace xfam;

namespace {

Family fam(int n, int k, std::vector<std::vector<int>> sets) {
  std::vector<Mask> ms;
  for (auto& s : sets) ms.push_back(mask_of(s, n));
  return Family::make(n, k, std::move(ms));
}

}  // namespace

TEST_CASE("transversal family basics") {
  Family two_blocks = fam(7, 3, {{1, 2, 3}, {4, 5, 6}});
  Family t2 = transversal_family(two_blocks, 2, full_mask(7));
  CHECK(t2.size() == 9);  // one element from each block, 7 is useless
  for (Mask m : t2.members) {
    CHECK((m & two_blocks.members[0]) != 0);
    CHECK((m & two_blocks.members[1]) != 0);
  }

  CHECK(transversal_family(fam(3, 1, {{1}}), 1, full_mask(3)) == fam(3, 1, {{1}}));

  // Non-trivial families admit no 1-transversal.
  Family nt = fam(5, 2, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(transversal_family(nt, 1, full_mask(5)).members.empty());

  CHECK_THROWS_AS(transversal_family(Family::empty(5, 2), 2, full_mask(5)), std::invalid_argument);
  Family vac = transversal_family(Family::empty(5, 2), 2, full_mask(5), true);
  CHECK(vac.size() == 10);
}

TEST_CASE("transversal family is antitone") {
  testutil::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.uniform(4, 8);
    Family big = testutil::random_family(rng, n, rng.uniform(1, 3), 10);
    if (big.size() < 2) continue;
    std::vector<Mask> sub(big.members.begin(), big.members.end() - 1);
    Family small = Family::make(n, big.k, sub);
    Family tbig = transversal_family(big, 2, full_mask(n));
    Family tsmall = transversal_family(small, 2, full_mask(n));
    for (Mask m : tbig.members) CHECK(tsmall.contains(m));
  }
}

TEST_CASE("saturation closure") {
  CrossPair base = disjoint_pair_construction(7, 3, 3);
  CHECK(is_saturated(base));
  CHECK(saturate(base) == base);

  // Removing a member gets restored by one closure pass.
  std::vector<Mask> fewer(base.f.members.begin() + 1, base.f.members.end());
  CrossPair dented = CrossPair::make(Family::make(7, 3, fewer), base.g);
  CHECK_FALSE(is_saturated(dented));
  CrossPair closed = saturate(dented);
  CHECK(closed == base);
  CHECK(saturate(closed) == closed);

  // Closure only adds members.
  testutil::Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    CrossPair p = testutil::random_ci_pair(rng, 7);
    CrossPair s = saturate(p);
    CHECK(is_saturated(s));
    for (Mask m : p.f.members) CHECK(s.f.contains(m));
    for (Mask m : p.g.members) CHECK(s.g.contains(m));
    CHECK(saturate(s) == s);
    // Enlarging can only shrink the common intersection.
    if (is_non_trivial(p.f)) CHECK(is_non_trivial(s.f));
    if (is_non_trivial(p.g)) CHECK(is_non_trivial(s.g));
  }
}

TEST_CASE("t2 graph") {
  Family disj = fam(4, 2, {{1, 2}, {3, 4}});
  CHECK(t2_graph(disj) == fam(4, 2, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  Family star = full_star(4, 2, 1);
  CHECK(t2_graph(star) == fam(4, 2, {{1, 2}, {1, 3}, {1, 4}}));
}

TEST_CASE("t2 graphs of the optimum pairs cross-intersect") {
  for (auto [n, k, l] : {std::array<int, 3>{6, 3, 2}, std::array<int, 3>{7, 3, 2},
                         std::array<int, 3>{5, 2, 2}, std::array<int, 3>{6, 2, 2}}) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.l = l;
    SearchResult r = max_pair(cfg);
    REQUIRE(!r.witnesses.empty());
    for (const CrossPair& w : r.witnesses) {
      CHECK(is_saturated(w));
      CHECK(is_cross_intersecting(t2_graph(w.f), t2_graph(w.g)));
    }
  }
}

TEST_CASE("saturated pairs force full cover slices") {
  // Whenever {i,j} is met by every member of one side, every partner-side set
  // through {i,j} already belongs to the other family.
  auto check_pair = [&](const CrossPair& p) {
    for (Mask ij : t2_graph(p.f).members)
      for (Mask cand : all_ksets(p.g.n, p.g.k))
        if ((cand & ij) == ij) CHECK(p.g.contains(cand));
    for (Mask ij : t2_graph(p.g).members)
      for (Mask cand : all_ksets(p.f.n, p.f.k))
        if ((cand & ij) == ij) CHECK(p.f.contains(cand));
  };
  testutil::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) check_pair(saturate(testutil::random_ci_pair(rng, 7)));

  for (auto [n, k, l] : {std::array<int, 3>{5, 2, 2}, std::array<int, 3>{6, 2, 2},
                         std::array<int, 3>{6, 3, 2}, std::array<int, 3>{7, 3, 2}}) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.l = l;
    SearchResult r = max_pair(cfg);
    REQUIRE(!r.witnesses.empty());
    for (const CrossPair& w : r.witnesses) check_pair(w);
  }
}

TEST_CASE("transversal counts") {
  Family g0 = fam(6, 3, {{1, 2, 3}, {4, 5, 6}});
  TransversalCounts tc = transversal_counts(g0, full_mask(6), 3);
  CHECK(tc.t(1) == 0);
  CHECK(tc.t(2) == 9);  // C(6,2) - 2*C(3,2)
  CHECK(tc.t(3) == binom(6, 3) - 2);

  // Single l-set on [2l]: t_r = C(2l,r) - C(l,r).
  for (int l = 2; l <= 4; ++l) {
    Family single = Family::make(2 * l, l, {prefix_mask(l)});
    TransversalCounts ts = transversal_counts(single, full_mask(2 * l), l);
    for (int r = 1; r <= l; ++r) CHECK(ts.t(r) == binom(2 * l, r) - binom(l, r));
  }

  // t_l = C(2l,l) - |g| for any family of l-sets on [2l].
  testutil::Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    int l = rng.uniform(2, 3);
    Family g = testutil::random_family(rng, 2 * l, l, 10);
    CHECK(transversal_counts(g, full_mask(2 * l), l).t(l) ==
          binom(2 * l, l) - static_cast<long long>(g.size()));
  }
}

TEST_CASE("noncover lower bound") {
  Family g0 = fam(6, 3, {{1, 2, 3}, {4, 5, 6}});
  CHECK(noncover_lower_bound_check(g0, 2));
  CHECK(binom(6, 2) - transversal_counts(g0, full_mask(6), 2).t(2) == 2 * binom(3, 2));
  CHECK_THROWS_AS(noncover_lower_bound_check(fam(4, 2, {{1, 2}, {3, 4}}), 2), std::invalid_argument);
  CHECK_THROWS_AS(noncover_lower_bound_check(g0, 3), std::invalid_argument);
}
