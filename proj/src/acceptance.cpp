#include "xfam/acceptance.hpp"

#include <bit>
#include <chrono>
#include <random>
#include <sstream>

#include "xfam/bounds.hpp"
#include "xfam/constructions.hpp"
#include "xfam/downset.hpp"
#include "xfam/family.hpp"
#include "xfam/phi_map.hpp"
#include "xfam/search.hpp"
#include "xfam/shifting.hpp"
#include "xfam/transversal.hpp"

namespace xfam::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  std::string name;
  std::ostringstream detail;
  bool ok = true;
  bool skipped = false;
  Clock::time_point start = Clock::now();

  explicit Checker(std::string n) : name(std::move(n)) {}

  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == static_cast<A>(want))) {
      ok = false;
      detail << " [FAIL " << what << ": got " << got << ", want " << want << "]";
    }
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [FAIL " << what << "]";
    }
  }
  void note(const std::string& s) { detail << " " << s; }

  CheckOutcome done() {
    CheckOutcome o;
    o.name = name;
    o.outcome = skipped ? "SKIPPED" : (ok ? "PASS" : "FAIL");
    o.detail = detail.str();
    o.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return o;
  }
};

SearchConfig base_config(int n, int k, int l) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.l = l;
  return cfg;
}

// ---- random instance generation (deterministic seeds) --------------------

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
};

std::vector<Mask> sample_distinct(Rng& rng, const std::vector<Mask>& space, int count) {
  std::vector<Mask> pool = space;
  std::vector<Mask> out;
  for (int i = 0; i < count && !pool.empty(); ++i) {
    int at = rng.uniform(0, static_cast<int>(pool.size()) - 1);
    out.push_back(pool[at]);
    pool[at] = pool.back();
    pool.pop_back();
  }
  return out;
}

std::vector<Mask> transversal_masks(const std::vector<Mask>& g, int n, int k) {
  std::vector<Mask> out;
  for (Mask cand : all_ksets(n, k)) {
    bool hits = true;
    for (Mask m : g)
      if (!(cand & m)) {
        hits = false;
        break;
      }
    if (hits) out.push_back(cand);
  }
  return out;
}

// Random nonempty cross-intersecting pair; g is sampled, f inside T^(k)(g).
CrossPair random_ci_pair(Rng& rng, int max_n) {
  while (true) {
    int n = rng.uniform(4, max_n);
    int k = rng.uniform(2, std::max(2, std::min(4, n / 2)));
    int l = rng.uniform(1, k);
    if (k + l > n) continue;
    auto lsets = all_ksets(n, l);
    auto g = sample_distinct(rng, lsets, rng.uniform(1, std::min<int>(8, lsets.size())));
    auto t = transversal_masks(g, n, k);
    if (t.empty()) continue;
    auto f = sample_distinct(rng, t, rng.uniform(1, std::min<int>(12, t.size())));
    return CrossPair::make(Family::make(n, k, std::move(f)), Family::make(n, l, std::move(g)));
  }
}

CrossPair random_nontrivial_ci_pair(Rng& rng, int max_n) {
  while (true) {
    int n = rng.uniform(5, max_n);
    int k = rng.uniform(2, std::max(2, std::min(3, n / 2)));
    int l = rng.uniform(2, k);
    if (k + l > n) continue;
    auto lsets = all_ksets(n, l);
    auto g = sample_distinct(rng, lsets, rng.uniform(2, std::min<int>(8, lsets.size())));
    Mask gand = ~Mask{0};
    for (Mask m : g) gand &= m;
    if (gand & full_mask(n)) continue;
    auto t = transversal_masks(g, n, k);
    if (t.empty()) continue;
    Mask tand = ~Mask{0};
    for (Mask m : t) tand &= m;
    if (tand & full_mask(n)) continue;  // every subfamily of a star is a star
    std::vector<Mask> f;
    for (int attempt = 0; attempt < 8; ++attempt) {
      f = sample_distinct(rng, t, rng.uniform(2, static_cast<int>(t.size())));
      Mask fand = ~Mask{0};
      for (Mask m : f) fand &= m;
      if (!(fand & full_mask(n))) break;
      f.clear();
    }
    if (f.empty()) f = t;
    return CrossPair::make(Family::make(n, k, std::move(f)), Family::make(n, l, std::move(g)));
  }
}

long long t2_count(const std::vector<Mask>& members, int n) {
  long long c = 0;
  for (Mask cand : all_ksets(n, 2)) {
    bool hits = true;
    for (Mask m : members)
      if (!(cand & m)) {
        hits = false;
        break;
      }
    if (hits) ++c;
  }
  return c;
}

}  // namespace

CheckOutcome formula_table() {
  Checker c("formula-table");
  c.expect_eq(ekr_bound(7, 3), 15LL, "ekr(7,3)");
  c.expect_eq(hm_bound(7, 3), 13LL, "hm(7,3)");
  c.expect_eq(h_nk(7, 3), 29LL, "h(7,3)");
  c.expect_eq(h_nkl(7, 3, 2), 18LL, "h(7,3,2)");
  c.expect_eq(h_nkl(6, 3, 2), 14LL, "h(6,3,2)");
  c.expect_eq(g_nkl(7, 3, 2), 16LL, "g(7,3,2)");
  c.expect_eq(g_nkl(7, 3, 3), 26LL, "g(7,3,3)");
  c.expect_eq(initial_bound(7, 3), 26LL, "initial(7,3)");
  c.expect_eq(ft_bound(7, 3, 2), 26LL, "ft(7,3,2)");
  c.expect_eq(product_bound(5, 2), 9LL, "product(5,2)");
  c.note("ten closed forms against hand-derived values");
  return c.done();
}

CheckOutcome search_vs_formula(int jobs) {
  Checker c("search-matches-closed-form");
  const int tuples[][3] = {{5, 2, 2}, {6, 2, 2}, {7, 2, 2}, {6, 3, 2}, {7, 3, 2}};
  for (auto [n, k, l] : tuples) {
    SearchConfig cfg = base_config(n, k, l);
    if (n == 7 && k == 3) cfg.jobs = jobs;
    SearchResult r = max_pair(cfg);
    c.expect(r.complete, "search complete at " + std::to_string(n));
    c.expect_eq(r.best_value, h_nkl(n, k, l),
                "best(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ")");
    c.note("(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ")=" +
           std::to_string(r.best_value));
  }
  return c.done();
}

CheckOutcome uniqueness_classes(int jobs) {
  Checker c("optimum-uniqueness-classes");
  struct Want {
    int n, k, l, classes;
  } wants[] = {{6, 3, 2, 1}, {7, 3, 2, 1}, {5, 2, 2, 3}, {6, 2, 2, 3}};
  for (auto w : wants) {
    SearchConfig cfg = base_config(w.n, w.k, w.l);
    if (w.n == 7) cfg.jobs = jobs;
    SearchResult r = max_pair(cfg);
    c.expect_eq(r.class_count, w.classes,
                "classes(" + std::to_string(w.n) + "," + std::to_string(w.k) + "," +
                    std::to_string(w.l) + ")");
  }
  return c.done();
}

CheckOutcome initial_pair_bound() {
  Checker c("initial-pair-bound");
  for (auto [n, k, l] : {std::array<int, 3>{6, 3, 3}, std::array<int, 3>{6, 3, 2}}) {
    SearchConfig cfg = base_config(n, k, l);
    cfg.constraint = Constraint::NontrivialBothInitial;
    cfg.strategy = Strategy::InitialDownsets;
    SearchResult r = max_pair(cfg);
    c.expect_eq(r.best_value, g_nkl(n, k, l),
                "initial best(" + std::to_string(n) + "," + std::to_string(k) + "," +
                    std::to_string(l) + ")");
    c.note("(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ")=" +
           std::to_string(r.best_value));
  }
  SearchConfig cfg = base_config(6, 3, 3);
  cfg.constraint = Constraint::NontrivialBothInitial;
  cfg.strategy = Strategy::InitialDownsets;
  c.expect_eq(max_pair(cfg).best_value, 20LL, "initial best(6,3,3) absolute");
  return c.done();
}

CheckOutcome nonempty_pair_bound() {
  Checker c("nonempty-pair-bound-and-strictness");
  {
    SearchConfig cfg = base_config(5, 3, 2);
    cfg.constraint = Constraint::CiOnlyMinG;
    cfg.min_g = 1;
    SearchResult r = max_pair(cfg);
    c.expect_eq(r.best_value, 10LL, "best(5,3,2)");
    c.expect_eq(r.best_value, ft_bound(5, 3, 2), "best(5,3,2) vs ft");
    c.expect(!r.witnesses_capped, "optimum classes fully enumerated at (5,3,2)");
    // Stated criterion: every optimum at (5,3,2) has |g| = 1. That fails:
    // 5 = k + l sits in the stated exception range of the bound, and any
    // nonempty g with a nonempty partner attains it there.
    std::size_t big_g = 0;
    std::size_t max_g = 0;
    for (const CrossPair& w : r.witnesses) {
      if (w.g.size() > 1) ++big_g;
      max_g = std::max(max_g, w.g.size());
    }
    c.expect(big_g == 0, "every (5,3,2) optimum has |g| = 1 -- counterexample classes: " +
                             std::to_string(big_g) + ", largest |g| = " + std::to_string(max_g) +
                             " (n = k + l equality case)");
  }
  {
    SearchConfig cfg = base_config(4, 2, 2);
    cfg.constraint = Constraint::CiOnlyMinG;
    cfg.min_g = 1;
    SearchResult r = max_pair(cfg);
    c.expect_eq(r.best_value, ft_bound(4, 2, 2), "best(4,2,2) vs ft");
    Family star = full_star(4, 2, 1);
    CrossPair star_pair = CrossPair::make(star, star);
    c.expect(star.size() == 3 && is_cross_intersecting(star_pair) &&
                 static_cast<long long>(star.size() * 2) == ft_bound(4, 2, 2),
             "(4,2,2) star pair with |g| = n - 1 attains the bound");
    CrossPair canon = canonical_form(star_pair);
    bool found = false;
    for (const CrossPair& w : r.witnesses)
      if (w == canon) found = true;
    c.expect(found, "(4,2,2) star pair appears among the optima");
  }
  return c.done();
}

CheckOutcome phi_injection() {
  Checker c("prefix-injection-verification");
  for (auto [n, k, l] : {std::array<int, 3>{6, 3, 2}, std::array<int, 3>{6, 3, 3}}) {
    ShiftPoset lposet = ShiftPoset::make(n, l);
    long long pairs = 0, violations = 0;
    lposet.for_each_downset([&](std::uint64_t bits) {
      if (!bits) return;
      Family g = lposet.family_from_bits(bits);
      Family t = transversal_family(g, k, full_mask(n));
      if (t.members.empty()) return;
      Family f = largest_initial_subfamily(t);
      if (f.members.empty()) return;
      ++pairs;
      PhiReport rep = verify_phi_injection(CrossPair::make(std::move(f), std::move(g)));
      if (!rep.all_ok()) ++violations;
    });
    c.expect_eq(violations, 0LL,
                "injection violations at (" + std::to_string(n) + "," + std::to_string(k) + "," +
                    std::to_string(l) + ")");
    c.note("(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + "): " +
           std::to_string(pairs) + " initial pairs, " + std::to_string(violations) + " violations");
  }
  return c.done();
}

CheckOutcome shifting_properties() {
  Checker c("shifting-property-battery");
  Rng rng(0x5eedf00d);
  const int trials = 10000;
  long long star_events = 0;
  for (int t = 0; t < trials && c.ok; ++t) {
    CrossPair p = random_ci_pair(rng, 8);
    const int n = p.f.n;
    const long long t2f = t2_count(p.f.members, n);
    const long long t2g = t2_count(p.g.members, n);
    const bool f_nontrivial = is_non_trivial(p.f);
    for (int i = 1; i <= n && c.ok; ++i)
      for (int j = 1; j <= n && c.ok; ++j) {
        if (i == j) continue;
        Family sf = shift_family(p.f, i, j);
        Family sg = shift_family(p.g, i, j);
        c.expect(sf.size() == p.f.size() && sg.size() == p.g.size(),
                 "size preservation, trial " + std::to_string(t));
        c.expect(is_cross_intersecting(sf, sg), "cross-intersection preservation, trial " + std::to_string(t));
        c.expect(t2_count(sf.members, n) >= t2f && t2_count(sg.members, n) >= t2g,
                 "cover-pair monotonicity, trial " + std::to_string(t));
        if (f_nontrivial && is_star(sf)) {
          ++star_events;
          StarFormation w = star_formation_witness(p.f, i, j);
          c.expect(w.formed && w.center == i && w.traces_disjoint && w.covers_ij,
                   "star formation conditions, trial " + std::to_string(t));
        }
      }
  }
  c.note(std::to_string(trials) + " random cross-intersecting pairs, " +
         std::to_string(star_events) + " star formations checked");
  return c.done();
}

CheckOutcome ad_extremis_properties() {
  Checker c("shifting-ad-extremis-battery");
  Rng rng(0xad137e15);
  const int trials = 1000;
  for (int t = 0; t < trials && c.ok; ++t) {
    CrossPair p = random_nontrivial_ci_pair(rng, 7);
    AdExtremisReport rep = shift_ad_extremis(p);
    for (std::size_t i = 1; i < rep.potential_trace.size(); ++i)
      c.expect(rep.potential_trace[i] < rep.potential_trace[i - 1],
               "potential strictly decreasing, trial " + std::to_string(t));
    c.expect(rep.shifts_applied.size() + 1 == rep.potential_trace.size(),
             "one potential entry per applied shift, trial " + std::to_string(t));
    c.expect(static_cast<long long>(rep.shifts_applied.size()) <=
                 rep.potential_trace.front() - rep.potential_trace.back(),
             "termination within the potential bound, trial " + std::to_string(t));
    c.expect(is_cross_intersecting(rep.final_pair), "final pair cross-intersecting, trial " + std::to_string(t));
    c.expect(is_non_trivial(rep.final_pair.f) && is_non_trivial(rep.final_pair.g),
             "non-triviality preserved, trial " + std::to_string(t));
    c.expect(rep.final_pair.f.size() == p.f.size() && rep.final_pair.g.size() == p.g.size(),
             "sizes preserved, trial " + std::to_string(t));
    const int n = p.f.n;
    c.expect(rep.classification.size() == static_cast<std::size_t>(n * (n - 1) / 2),
             "classification total, trial " + std::to_string(t));
    for (const auto& [ij, tag] : rep.classification) {
      PairClass pc = classify_pair(rep.final_pair, ij.first, ij.second);
      c.expect(pc.primary() && *pc.primary() == tag, "classification re-verifies, trial " + std::to_string(t));
    }
  }
  c.note(std::to_string(trials) + " random non-trivial cross-intersecting pairs");
  return c.done();
}

CheckOutcome noncover_bound() {
  Checker c("noncover-count-bound");
  // l = 2: the range 2 <= r < l is empty, nothing to check.
  c.note("l=2: empty r-range, vacuous");

  // l = 3: all non-trivial families inside C([6],3), r = 2.
  const int n = 6;
  const auto gsets = all_ksets(n, 3);
  const auto pairs = all_ksets(n, 2);
  std::vector<std::uint32_t> meets(pairs.size(), 0);
  for (std::size_t t = 0; t < pairs.size(); ++t)
    for (std::size_t g = 0; g < gsets.size(); ++g)
      if (pairs[t] & gsets[g]) meets[t] |= std::uint32_t{1} << g;
  long long checked = 0, violations = 0;
  bool equality_seen = false;
  const std::uint32_t total = std::uint32_t{1} << gsets.size();
  for (std::uint32_t bits = 1; bits < total; ++bits) {
    Mask acc = ~Mask{0};
    for (std::uint32_t b = bits; b; b &= b - 1) acc &= gsets[std::countr_zero(b)];
    if (acc & full_mask(n)) continue;  // star
    ++checked;
    int t2 = 0;
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if ((bits & ~meets[t]) == 0) ++t2;
    if (t2 > 9) ++violations;
    if (t2 == 9) equality_seen = true;
  }
  c.expect_eq(violations, 0LL, "t2 <= 9 over all non-trivial 3-families in [6]");
  c.expect(equality_seen, "equality attained");
  Family g0 = Family::make(6, 3, {mask_of({1, 2, 3}, 6), mask_of({4, 5, 6}, 6)});
  c.expect_eq(transversal_counts(g0, full_mask(6), 3).t(2), 9LL, "t2 of the two disjoint triples");
  c.expect(noncover_lower_bound_check(g0, 2), "noncover bound on the two disjoint triples");
  c.note(std::to_string(checked) + " non-trivial families checked");
  return c.done();
}

CheckOutcome inequality_checkers() {
  Checker c("inequality-checker-battery");
  Rng rng(0x1eaf1e55);

  // Exhaustive 0-1 appropriate sequences, q <= 10.
  long long shift_checks = 0;
  for (int q = 2; q <= 10 && c.ok; ++q)
    for (int p = 0; p <= q - 2 && c.ok; ++p) {
      std::vector<AppropriateSequence> as, bs;
      for (int t = 0; t * 2 <= q; ++t) as.push_back(AppropriateSequence::zero_one_block(q + 1, t, q - t));
      as.push_back(AppropriateSequence::zero_one_block(q + 1, 1, 0));  // all zero
      for (int t = 0; t * 2 <= p; ++t) bs.push_back(AppropriateSequence::zero_one_block(p + 1, t, p - t));
      bs.push_back(AppropriateSequence::zero_one_block(p + 1, 1, 0));
      for (const auto& a : as)
        for (const auto& b : bs)
          for (int u = 0; u <= q - p && c.ok; ++u)
            for (int v = u + 1; u + v <= q - p && c.ok; ++v) {
              ++shift_checks;
              c.expect(check_appropriate_inequality(a, b, u, v), "0-1 translate overlap inequality");
            }
    }

  // Random nonnegative rational appropriate sequences.
  auto random_appropriate = [&](int length) {
    const int mid = (length - 1) / 2;
    std::vector<Rational> e(length, Rational(0));
    Rational cur(0);
    for (int i = 0; i <= mid; ++i) {
      cur = cur + Rational::make(rng.uniform(0, 6), 1 + rng.uniform(0, 4));
      e[i] = cur;
      e[length - 1 - i] = cur;
    }
    return AppropriateSequence::make(std::move(e));
  };
  for (int t = 0; t < 10000 && c.ok; ++t) {
    int q = rng.uniform(2, 10);
    int p = rng.uniform(0, q - 2);
    auto a = random_appropriate(q + 1);
    auto b = random_appropriate(p + 1);
    int u = rng.uniform(0, (q - p - 1) / 2);
    int v = rng.uniform(u + 1, q - p - u);
    c.expect(check_appropriate_inequality(a, b, u, v), "rational translate overlap inequality");
  }
  c.note(std::to_string(shift_checks) + " exhaustive 0-1 checks + 10000 rational checks");

  // Binomial sum inequality sweep.
  long long sweep = 0;
  for (int n = 1; n <= 14; ++n)
    for (int k = 2; k <= 6; ++k)
      for (int l = 2; l <= k; ++l) {
        if (n < k + l + 1) continue;
        for (int t = (l + 2) / 2; t <= l - 1; ++t) {
          if (2 * t < l + 1) continue;
          ++sweep;
          c.expect(check_binomial_sum_inequality(n, k, l, t),
                   "binomial sum inequality at n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                       ",l=" + std::to_string(l) + ",t=" + std::to_string(t));
        }
      }
  c.note(std::to_string(sweep) + " binomial-sum instances");

  // Cross density on random cross-intersecting cross-uniform pairs.
  for (int t = 0; t < 10000 && c.ok; ++t) {
    CrossPair p = random_ci_pair(rng, 8);
    if (p.f.n < p.f.k + p.g.k) continue;
    c.expect(check_cross_density(p.f, p.g), "density sum at trial " + std::to_string(t));
  }

  // Normalized shadow inequality on random families.
  for (int t = 0; t < 10000 && c.ok; ++t) {
    int n = rng.uniform(4, 10);
    int k = rng.uniform(1, std::min(5, n));
    auto space = all_ksets(n, k);
    auto f = sample_distinct(rng, space, rng.uniform(1, std::min<int>(12, space.size())));
    Family fam = Family::make(n, k, std::move(f));
    int tt = rng.uniform(0, k);
    Family sh = shadow(fam, tt);
    Rational lhs = Rational::make(Int128(sh.size()), Int128(binom(n, tt)));
    Rational rhs = Rational::make(Int128(fam.size()), Int128(binom(n, k)));
    c.expect(rhs <= lhs, "normalized shadow inequality at trial " + std::to_string(t));
  }
  return c.done();
}

CheckOutcome chain_identity() {
  Checker c("chain-counting-identity");
  c.expect(check_chain_identity(initial_extremal_pair(7, 3, 2), 2), "identity at (7,3,2)");
  c.expect(check_chain_identity(initial_extremal_pair(6, 3, 3), 3), "identity at (6,3,3)");
  return c.done();
}

std::vector<CheckOutcome> run_small(int jobs) {
  return {formula_table(),
          search_vs_formula(jobs),
          uniqueness_classes(jobs),
          initial_pair_bound(),
          nonempty_pair_bound(),
          phi_injection(),
          shifting_properties(),
          ad_extremis_properties(),
          noncover_bound(),
          inequality_checkers(),
          chain_identity()};
}

std::vector<CheckOutcome> run_full(int jobs) {
  std::vector<CheckOutcome> out = run_small(jobs);

  {
    Checker c("stretch-product-objective");
    for (int n : {5, 6, 7}) {
      SearchConfig cfg = base_config(n, 2, 2);
      cfg.objective = Objective::Product;
      SearchResult r = max_pair(cfg);
      c.expect_eq(r.best_value, product_bound(n, 2), "product best(" + std::to_string(n) + ",2)");
    }
    out.push_back(c.done());
  }
  {
    Checker c("stretch-branch-and-bound-agreement");
    const int tuples[][3] = {{5, 2, 2}, {6, 2, 2}, {7, 2, 2}, {6, 3, 2}, {7, 3, 2}};
    for (auto [n, k, l] : tuples) {
      SearchConfig ex = base_config(n, k, l);
      SearchConfig bb = base_config(n, k, l);
      bb.strategy = Strategy::BranchAndBound;
      SearchResult re = max_pair(ex);
      SearchResult rb = max_pair(bb);
      c.expect(re.best_value == rb.best_value && re.class_count == rb.class_count,
               "strategies agree at (" + std::to_string(n) + "," + std::to_string(k) + "," +
                   std::to_string(l) + ")");
    }
    out.push_back(c.done());
  }
  {
    Checker c("stretch-classes-at-n7-k2");
    SearchConfig cfg = base_config(7, 2, 2);
    c.expect_eq(max_pair(cfg).class_count, 3, "classes(7,2,2)");
    out.push_back(c.done());
  }
  {
    Checker c("stretch-equal-uniformity-boundary");
    SearchConfig cfg = base_config(6, 3, 3);
    SearchResult r = max_pair(cfg);
    c.expect_eq(r.best_value, h_nkl(6, 3, 3), "best(6,3,3)");
    out.push_back(c.done());
  }
  return out;
}

}  // namespace xfam::acceptance
