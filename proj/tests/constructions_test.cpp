#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xfam/bounds.hpp"
#include "xfam/constructions.hpp"
#include "xfam/family.hpp"

using namespace xfam;

TEST_CASE("full star") {
  Family s = full_star(6, 3, 1);
  CHECK(s.size() == 10);
  CHECK(static_cast<long long>(s.size()) == ekr_bound(6, 3));
  CHECK(is_intersecting(s));
  CHECK(is_star(s));
  CHECK_FALSE(is_non_trivial(s));
  CHECK(full_star(4, 4, 2).size() == 1);
  CHECK_THROWS_AS(full_star(4, 2, 5), std::invalid_argument);
}

TEST_CASE("hilton-milner family") {
  Family hm = hilton_milner(7, 3);
  CHECK(hm.size() == 13);
  CHECK(static_cast<long long>(hm.size()) == hm_bound(7, 3));
  CHECK(hm.contains(interval_mask(2, 4)));
  CHECK(is_intersecting(hm));
  CHECK(is_non_trivial(hm));
  CHECK(is_initial(hm));
  CHECK_THROWS_AS(hilton_milner(6, 3), std::invalid_argument);

  for (int k = 2; k <= 4; ++k)
    for (int n = 2 * k + 1; n <= 10; ++n)
      CHECK(static_cast<long long>(hilton_milner(n, k).size()) == hm_bound(n, k));
}

TEST_CASE("triangle family") {
  Family tr = triangle_family(7);
  CHECK(tr.size() == 13);
  CHECK(tr.size() == hilton_milner(7, 3).size());
  CHECK(is_intersecting(tr));
  CHECK(is_non_trivial(tr));
  CHECK(is_initial(tr));
  CHECK(is_cross_intersecting(tr, tr));
  CHECK(triangle_family(3).size() == 1);
  CHECK_THROWS_AS(triangle_family(7, 2), std::invalid_argument);
  for (int n = 4; n <= 9; ++n)
    CHECK(triangle_family(n).size() == static_cast<std::size_t>(3 * (n - 3) + 1));
}

TEST_CASE("two disjoint blocks and their transversal family") {
  CrossPair p = disjoint_pair_construction(7, 3, 2);
  CHECK(p.f.size() + p.g.size() == 18);
  CHECK(static_cast<long long>(p.f.size() + p.g.size()) == h_nkl(7, 3, 2));
  CHECK(is_cross_intersecting(p));
  CHECK(is_non_trivial(p.f));
  CHECK(is_non_trivial(p.g));

  CrossPair q = disjoint_pair_construction(7, 3, 3);
  CHECK(q.f.size() + q.g.size() == 29);
  CHECK(static_cast<long long>(q.f.size() + q.g.size()) == h_nk(7, 3));

  for (int k = 2; k <= 4; ++k)
    for (int l = 2; l <= k; ++l)
      for (int n = k + l; n <= 10; ++n) {
        CrossPair c = disjoint_pair_construction(n, k, l);
        CHECK(static_cast<long long>(c.f.size() + c.g.size()) == h_nkl(n, k, l));
        CHECK(is_cross_intersecting(c));
        CHECK(is_non_trivial(c.f));
        CHECK(is_non_trivial(c.g));
      }
  CHECK_THROWS_AS(disjoint_pair_construction(4, 3, 2), std::invalid_argument);
}

TEST_CASE("initial extremal pair") {
  CrossPair p = initial_extremal_pair(7, 3, 3);
  CHECK(p.f.size() + p.g.size() == 26);
  CHECK(static_cast<long long>(p.f.size() + p.g.size()) == initial_bound(7, 3));

  CrossPair q = initial_extremal_pair(7, 3, 2);
  CHECK(q.f.size() + q.g.size() == 16);
  CHECK(static_cast<long long>(q.f.size() + q.g.size()) == g_nkl(7, 3, 2));

  for (int k = 2; k <= 4; ++k)
    for (int l = 1; l <= k; ++l)
      for (int n = k + l; n <= 10; ++n) {
        CrossPair c = initial_extremal_pair(n, k, l);
        CHECK(static_cast<long long>(c.f.size() + c.g.size()) == g_nkl(n, k, l));
        CHECK(is_cross_intersecting(c));
        CHECK(is_initial(c.f));
        CHECK(is_initial(c.g));
        if (l >= 2) {
          CHECK(is_non_trivial(c.f));
          CHECK(is_non_trivial(c.g));
        }
      }
}

TEST_CASE("the two extra optima at k = l = 2") {
  auto extras = k2_extra_optima(5);
  REQUIRE(extras.size() == 2);
  for (const CrossPair& p : extras) {
    CHECK(p.f.size() + p.g.size() == 6);
    CHECK(is_cross_intersecting(p));
    CHECK(is_non_trivial(p.f));
    CHECK(is_non_trivial(p.g));
  }
  CHECK(extras[0].f == extras[0].g);
  CHECK_THROWS_AS(k2_extra_optima(3), std::invalid_argument);
}
