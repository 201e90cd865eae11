#include "xfam/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "xfam/bounds.hpp"
#include "xfam/downset.hpp"
#include "xfam/transversal.hpp"

namespace xfam {

namespace {

constexpr int kExhaustiveBudgetBits = 24;

struct Universe {
  SearchConfig cfg;
  std::vector<Mask> lsets;
  std::vector<Mask> ksets;
  std::vector<std::uint64_t> kalive;  // per l-set: k-set indices meeting it
  std::uint64_t all_k = 0;
  ShiftPoset kposet;  // populated for the initial constraint only
  ShiftPoset lposet;

  static Universe make(const SearchConfig& cfg) {
    Universe u;
    u.cfg = cfg;
    u.lsets = all_ksets(cfg.n, cfg.l);
    u.ksets = all_ksets(cfg.n, cfg.k);
    if (u.ksets.size() > 64) throw std::invalid_argument("k-set space exceeds 64 sets");
    u.all_k = u.ksets.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << u.ksets.size()) - 1;
    u.kalive.assign(u.lsets.size(), 0);
    for (std::size_t s = 0; s < u.lsets.size(); ++s)
      for (std::size_t f = 0; f < u.ksets.size(); ++f)
        if (u.lsets[s] & u.ksets[f]) u.kalive[s] |= std::uint64_t{1} << f;
    if (cfg.constraint == Constraint::NontrivialBothInitial) {
      u.kposet = ShiftPoset::make(cfg.n, cfg.k);
      u.lposet = ShiftPoset::make(cfg.n, cfg.l);
    }
    return u;
  }

  Mask g_common(std::uint64_t gbits) const {
    Mask acc = ~Mask{0};
    std::uint64_t b = gbits;
    while (b) {
      acc &= lsets[std::countr_zero(b)];
      b &= b - 1;
    }
    return acc & full_mask(cfg.n);
  }

  std::uint64_t f_alive(std::uint64_t gbits) const {
    std::uint64_t alive = all_k;
    std::uint64_t b = gbits;
    while (b && alive) {
      alive &= kalive[std::countr_zero(b)];
      b &= b - 1;
    }
    return alive;
  }

  Mask f_common(std::uint64_t fbits) const {
    Mask acc = ~Mask{0};
    while (fbits) {
      acc &= ksets[std::countr_zero(fbits)];
      if (!acc) return 0;
      fbits &= fbits - 1;
    }
    return acc & full_mask(cfg.n);
  }

  // Value of the candidate g, or -1 when the constraint rejects it.
  long long evaluate(std::uint64_t gbits, std::uint64_t* fbits_out) const {
    const int gcount = std::popcount(gbits);
    if (gcount == 0) return -1;
    switch (cfg.constraint) {
      case Constraint::NontrivialBoth:
        if (g_common(gbits) != 0) return -1;
        break;
      case Constraint::NontrivialBothInitial:
        if (g_common(gbits) != 0) return -1;
        if (!lposet.is_downset(gbits)) return -1;
        break;
      case Constraint::CiOnlyMinG:
        if (gcount < cfg.min_g) return -1;
        break;
    }
    std::uint64_t fbits = f_alive(gbits);
    if (cfg.constraint == Constraint::NontrivialBothInitial) fbits = u_initial_closure(fbits);
    const int fcount = std::popcount(fbits);
    if (fcount == 0) return -1;
    if (cfg.constraint != Constraint::CiOnlyMinG && f_common(fbits) != 0) return -1;
    if (fbits_out) *fbits_out = fbits;
    return cfg.objective == Objective::Sum ? fcount + gcount
                                           : static_cast<long long>(fcount) * gcount;
  }

  std::uint64_t u_initial_closure(std::uint64_t fbits) const { return kposet.initial_closure(fbits); }

  CrossPair rebuild(std::uint64_t gbits, std::uint64_t fbits) const {
    std::vector<Mask> gm, fm;
    for (std::size_t s = 0; s < lsets.size(); ++s)
      if ((gbits >> s) & 1) gm.push_back(lsets[s]);
    for (std::size_t f = 0; f < ksets.size(); ++f)
      if ((fbits >> f) & 1) fm.push_back(ksets[f]);
    return CrossPair::make(Family::make(cfg.n, cfg.k, std::move(fm)),
                           Family::make(cfg.n, cfg.l, std::move(gm)));
  }
};

struct Tally {
  std::size_t cap = std::size_t{1} << 17;
  long long best = -1;
  std::vector<std::uint64_t> optima;  // g-side index masks attaining best
  long long optimum_count = 0;
  bool capped = false;
  long long enumerated = 0;
  bool complete = true;

  void offer(long long value, std::uint64_t gbits) {
    if (value < 0 || value < best) return;
    if (value > best) {
      best = value;
      optima.clear();
      optimum_count = 0;
      capped = false;
    }
    ++optimum_count;
    if (optima.size() < cap)
      optima.push_back(gbits);
    else
      capped = true;
  }

  void merge(const Tally& o) {
    enumerated += o.enumerated;
    complete = complete && o.complete;
    if (o.best > best) {
      best = o.best;
      optima = o.optima;
      optimum_count = o.optimum_count;
      capped = o.capped;
    } else if (o.best == best && best >= 0) {
      optimum_count += o.optimum_count;
      capped = capped || o.capped;
      for (std::uint64_t g : o.optima) {
        if (optima.size() >= cap) {
          capped = true;
          break;
        }
        optima.push_back(g);
      }
    }
  }
};

struct BudgetClock {
  long long node_budget;
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline;
  std::atomic<bool>* cancel;

  bool spent(long long nodes) const {
    if (cancel->load(std::memory_order_relaxed)) return true;
    if (node_budget >= 0 && nodes > node_budget) return true;
    if (has_deadline && std::chrono::steady_clock::now() > deadline) return true;
    return false;
  }
};

void exhaustive_worker(const Universe& u, std::uint64_t lo, std::uint64_t hi, BudgetClock clock,
                       Tally& out) {
  Tally t;
  t.cap = u.cfg.witness_cap;
  for (std::uint64_t g = lo; g < hi; ++g) {
    if ((t.enumerated & 0x1fff) == 0 && clock.spent(t.enumerated)) {
      t.complete = false;
      clock.cancel->store(true, std::memory_order_relaxed);
      break;
    }
    ++t.enumerated;
    t.offer(u.evaluate(g, nullptr), g);
  }
  out = std::move(t);
}

void bnb_search(const Universe& u, Tally& t, const BudgetClock& clock) {
  const std::size_t m = u.lsets.size();
  std::vector<Mask> suffix_and(m + 1, ~Mask{0});
  for (std::size_t i = m; i-- > 0;) suffix_and[i] = suffix_and[i + 1] & u.lsets[i];

  struct Frame {
    std::size_t idx;
    std::uint64_t gbits;
    std::uint64_t alive;
    Mask g_and;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, u.all_k, ~Mask{0}});
  const bool nontrivial = u.cfg.constraint != Constraint::CiOnlyMinG;
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    ++t.enumerated;
    if ((t.enumerated & 0x1fff) == 0 && clock.spent(t.enumerated)) {
      t.complete = false;
      break;
    }
    if (fr.idx == m) {
      std::uint64_t fbits = 0;
      // Re-run the full constraint battery; `alive` already equals f_alive.
      long long v = u.evaluate(fr.gbits, &fbits);
      t.offer(v, fr.gbits);
      continue;
    }
    const long long max_g = std::popcount(fr.gbits) + static_cast<long long>(m - fr.idx);
    const long long max_f = std::popcount(fr.alive);
    if (max_f == 0) continue;  // every constraint needs a nonempty partner
    if (nontrivial && (u.f_common(fr.alive) & full_mask(u.cfg.n)) != 0)
      continue;  // partner can only lose members, its core never re-opens
    if (nontrivial && ((fr.g_and & suffix_and[fr.idx]) & full_mask(u.cfg.n)) != 0)
      continue;  // g cannot become non-trivial any more
    const long long ub = u.cfg.objective == Objective::Sum ? max_g + max_f : max_g * max_f;
    if (t.best >= 0 && ub < t.best) continue;
    stack.push_back({fr.idx + 1, fr.gbits, fr.alive, fr.g_and});
    stack.push_back({fr.idx + 1, fr.gbits | (std::uint64_t{1} << fr.idx),
                     fr.alive & u.kalive[fr.idx], fr.g_and & u.lsets[fr.idx]});
  }
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::ExhaustiveG: return "exhaustive-g";
    case Strategy::InitialDownsets: return "initial-downsets";
    case Strategy::BranchAndBound: return "branch-and-bound";
  }
  return "?";
}

}  // namespace

CrossPair canonical_form(const CrossPair& p) {
  const int n = p.f.n;
  if (n > 9) throw std::invalid_argument("canonical form capped at n <= 9");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best_f, best_g;
  bool have = false;
  std::vector<Mask> fm(p.f.size()), gm(p.g.size());
  do {
    auto map_all = [&](const std::vector<Mask>& in, std::vector<Mask>& out) {
      for (std::size_t i = 0; i < in.size(); ++i) {
        Mask m = in[i], r = 0;
        while (m) {
          r |= Mask{1} << perm[std::countr_zero(m)];
          m &= m - 1;
        }
        out[i] = r;
      }
      std::sort(out.begin(), out.end());
    };
    map_all(p.f.members, fm);
    map_all(p.g.members, gm);
    if (!have || fm < best_f || (fm == best_f && gm < best_g)) {
      best_f = fm;
      best_g = gm;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CrossPair::make(Family::make(n, p.f.k, std::move(best_f)),
                         Family::make(n, p.g.k, std::move(best_g)));
}

std::vector<CrossPair> canonical_classes(const std::vector<CrossPair>& optima, bool unordered_pair) {
  std::set<std::pair<std::vector<Mask>, std::vector<Mask>>> seen;
  std::vector<CrossPair> reps;
  for (const CrossPair& p : optima) {
    CrossPair c = canonical_form(p);
    if (unordered_pair && p.f.k == p.g.k) {
      CrossPair swapped = canonical_form(CrossPair::make(p.g, p.f));
      if (std::pair(swapped.f.members, swapped.g.members) < std::pair(c.f.members, c.g.members))
        c = std::move(swapped);
    }
    if (seen.insert({c.f.members, c.g.members}).second) reps.push_back(std::move(c));
  }
  std::sort(reps.begin(), reps.end(), [](const CrossPair& a, const CrossPair& b) {
    return std::pair(a.f.members, a.g.members) < std::pair(b.f.members, b.g.members);
  });
  return reps;
}

SearchResult max_pair(const SearchConfig& cfg) {
  GroundContext ctx(cfg.n, cfg.k, cfg.l);  // validates the parameter block
  (void)ctx;
  if (cfg.constraint == Constraint::CiOnlyMinG && cfg.min_g < 1)
    throw std::invalid_argument("min_g must be at least 1");
  const long long lcount = binom(cfg.n, cfg.l);
  if (cfg.strategy != Strategy::InitialDownsets && lcount > kExhaustiveBudgetBits)
    throw std::invalid_argument("C(n,l) = " + std::to_string(lcount) +
                                " exceeds the 2^" + std::to_string(kExhaustiveBudgetBits) +
                                " g-subset enumeration budget");
  if (binom(cfg.n, cfg.k) > 64) throw std::invalid_argument("k-set space exceeds 64 sets");

  const auto t0 = std::chrono::steady_clock::now();
  Universe u = Universe::make(cfg);
  std::atomic<bool> cancel{false};
  BudgetClock clock{cfg.node_budget,
                    t0 + std::chrono::milliseconds(cfg.time_budget_ms < 0 ? 0 : cfg.time_budget_ms),
                    cfg.time_budget_ms >= 0, &cancel};

  Tally tally;
  tally.cap = cfg.witness_cap;
  std::string proof;
  switch (cfg.strategy) {
    case Strategy::ExhaustiveG: {
      const std::uint64_t total = std::uint64_t{1} << u.lsets.size();
      const int jobs = std::max(1, cfg.jobs);
      if (jobs == 1) {
        exhaustive_worker(u, 0, total, clock, tally);
      } else {
        std::vector<Tally> parts(jobs);
        std::vector<std::thread> threads;
        BudgetClock wclock = clock;
        if (wclock.node_budget >= 0) wclock.node_budget = cfg.node_budget / jobs;
        for (int t = 0; t < jobs; ++t) {
          std::uint64_t lo = total / jobs * t;
          std::uint64_t hi = t + 1 == jobs ? total : total / jobs * (t + 1);
          threads.emplace_back(exhaustive_worker, std::cref(u), lo, hi, wclock, std::ref(parts[t]));
        }
        for (auto& th : threads) th.join();
        for (const Tally& p : parts) tally.merge(p);
      }
      proof = "all 2^" + std::to_string(u.lsets.size()) + " g-subsets of C([" +
              std::to_string(cfg.n) + "]," + std::to_string(cfg.l) + ") enumerated";
      break;
    }
    case Strategy::InitialDownsets: {
      ShiftPoset lposet = ShiftPoset::make(cfg.n, cfg.l);
      bool spent = false;
      lposet.for_each_downset([&](std::uint64_t bits) {
        if (spent) return;
        if ((tally.enumerated & 0x1fff) == 0 && clock.spent(tally.enumerated)) {
          tally.complete = false;
          spent = true;
          return;
        }
        ++tally.enumerated;
        // The poset and the universe both list l-sets in mask order, so the
        // index bits line up directly.
        tally.offer(u.evaluate(bits, nullptr), bits);
      });
      proof = std::to_string(tally.enumerated) + " down-sets of the shift order enumerated";
      break;
    }
    case Strategy::BranchAndBound: {
      bnb_search(u, tally, clock);
      proof = "depth-first over g-membership with admissible pruning, " +
              std::to_string(tally.enumerated) + " nodes";
      break;
    }
  }

  SearchResult res;
  res.enumerated = tally.enumerated;
  res.complete = tally.complete;
  res.optimum_count = tally.optimum_count;
  res.witnesses_capped = tally.capped;
  res.exhaustiveness = (tally.complete ? "" : "INCOMPLETE: ") + strategy_name(cfg.strategy) + ": " + proof;
  if (tally.best >= 0) {
    res.best_value = tally.best;
    if (tally.capped || cfg.n > 9) {
      // Value is exact; the class report is not available here.
      res.class_count = -1;
      if (tally.capped)
        res.exhaustiveness += "; optimum witness list capped at " + std::to_string(cfg.witness_cap);
    } else {
      std::sort(tally.optima.begin(), tally.optima.end());
      tally.optima.erase(std::unique(tally.optima.begin(), tally.optima.end()), tally.optima.end());
      std::vector<CrossPair> raw;
      raw.reserve(tally.optima.size());
      for (std::uint64_t g : tally.optima) {
        std::uint64_t fbits = 0;
        long long v = u.evaluate(g, &fbits);
        if (v != tally.best) throw std::logic_error("optimum failed re-validation");
        raw.push_back(u.rebuild(g, fbits));
      }
      res.witnesses = canonical_classes(raw, cfg.k == cfg.l);
      res.class_count = static_cast<int>(res.witnesses.size());
    }
  }
  res.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

TheoremReport verify_theorem(TheoremCheck check, int n, int k, int l, int jobs) {
  TheoremReport rep;
  SearchConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.l = l;
  cfg.jobs = jobs;
  try {
    switch (check) {
      case TheoremCheck::NontrivialSumMax: {
        cfg.constraint = Constraint::NontrivialBoth;
        rep.formula_value = h_nkl(n, k, l);
        SearchResult r = max_pair(cfg);
        rep.search_value = r.best_value;
        rep.class_count = r.class_count;
        bool ok = r.complete && r.best_value == rep.formula_value;
        if (n > k + l) {
          const bool exceptional = (k == 2 && l == 2);
          const int expected_classes = exceptional ? 3 : 1;
          ok = ok && r.class_count == expected_classes;
          rep.detail = "best " + std::to_string(r.best_value) + " vs formula " +
                       std::to_string(rep.formula_value) + ", classes " +
                       std::to_string(r.class_count) + " (expected " +
                       std::to_string(expected_classes) + ")";
        } else {
          rep.detail = "best " + std::to_string(r.best_value) + " vs formula " +
                       std::to_string(rep.formula_value) + " (n = k + l: no uniqueness claim)";
        }
        rep.pass = ok;
        break;
      }
      case TheoremCheck::InitialSumMax: {
        cfg.constraint = Constraint::NontrivialBothInitial;
        cfg.strategy = Strategy::InitialDownsets;
        rep.formula_value = g_nkl(n, k, l);
        SearchResult r = max_pair(cfg);
        rep.search_value = r.best_value;
        rep.class_count = r.class_count;
        rep.pass = r.complete && r.best_value == rep.formula_value;
        rep.detail = "initial best " + std::to_string(r.best_value) + " vs formula " +
                     std::to_string(rep.formula_value);
        break;
      }
      case TheoremCheck::NonemptySumMax: {
        cfg.constraint = Constraint::CiOnlyMinG;
        cfg.min_g = 1;
        rep.formula_value = ft_bound(n, k, l);
        SearchResult r = max_pair(cfg);
        rep.search_value = r.best_value;
        rep.class_count = r.class_count;
        bool ok = r.complete && r.best_value == rep.formula_value;
        rep.detail = "nonempty best " + std::to_string(r.best_value) + " vs formula " +
                     std::to_string(rep.formula_value);
        if (n > k + l && !(k == 2 && l == 2)) {
          bool strict = !r.witnesses_capped;
          for (const CrossPair& w : r.witnesses)
            if (w.g.size() > 1) strict = false;
          ok = ok && strict;
          rep.detail += r.witnesses_capped ? "; witness list capped, strictness not certified"
                        : strict           ? "; every optimum has |g| = 1"
                                           : "; an optimum with |g| > 1 exists";
        } else {
          rep.detail += "; strictness not claimed in this range";
        }
        rep.pass = ok;
        break;
      }
    }
  } catch (const std::invalid_argument& e) {
    rep.skipped = true;
    rep.detail = std::string("SKIPPED: ") + e.what();
  }
  return rep;
}

}  // namespace xfam
