#include "xfam/shifting.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace xfam {

namespace {

void check_ij(int i, int j, int n) {
  if (i == j) throw std::invalid_argument("shift indices must differ");
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("shift index outside [1,n]");
}

Mask shift_image(Mask s, Mask bi, Mask bj) {
  return (s & ~bj) | bi;
}

// Sorted member list of S_ij applied to every member of f.
std::vector<Mask> shift_members(const Family& f, int i, int j) {
  const Mask bi = element_bit(i), bj = element_bit(j);
  std::vector<Mask> out;
  out.reserve(f.members.size());
  for (Mask m : f.members) {
    if (!(m & bi) && (m & bj)) {
      Mask im = shift_image(m, bi, bj);
      out.push_back(f.contains(im) ? m : im);
    } else {
      out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool members_form_star(const std::vector<Mask>& members) {
  if (members.empty()) return false;
  Mask acc = ~Mask{0};
  for (Mask m : members) {
    acc &= m;
    if (!acc) return false;
  }
  return true;
}

}  // namespace

Mask shift_set(Mask s, int i, int j, const Family& home) {
  check_ij(i, j, home.n);
  if (!home.contains(s)) throw std::invalid_argument("shift_set target is not a member of its family");
  const Mask bi = element_bit(i), bj = element_bit(j);
  if ((s & bi) || !(s & bj)) return s;
  Mask im = shift_image(s, bi, bj);
  return home.contains(im) ? s : im;
}

Family shift_family(const Family& f, int i, int j) {
  check_ij(i, j, f.n);
  return Family::make(f.n, f.k, shift_members(f, i, j));
}

Family shift_to_initial(const Family& f) {
  Family cur = f;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= cur.n; ++i)
      for (int j = i + 1; j <= cur.n; ++j) {
        Family next = shift_family(cur, i, j);
        if (!(next == cur)) {
          cur = std::move(next);
          changed = true;
        }
      }
  }
  return cur;
}

StarFormation star_formation_witness(const Family& f, int i, int j) {
  check_ij(i, j, f.n);
  if (!is_non_trivial(f)) throw std::invalid_argument("star formation witness requires a non-trivial family");
  StarFormation w;
  Family shifted = shift_family(f, i, j);
  if (!is_star(shifted)) return w;
  w.formed = true;
  w.center = (common_intersection(shifted) & element_bit(i)) ? i : min_element(common_intersection(shifted));
  Restricted fi = restrict_family(f, element_bit(i), 0);
  Restricted fj = restrict_family(f, element_bit(j), 0);
  w.traces_disjoint = true;
  for (Mask m : fi.family.members)
    if (fj.family.contains(m)) {
      w.traces_disjoint = false;
      break;
    }
  const Mask ij = element_bit(i) | element_bit(j);
  w.covers_ij = true;
  for (Mask m : f.members)
    if (!(m & ij)) {
      w.covers_ij = false;
      break;
    }
  return w;
}

std::optional<PairType> PairClass::primary() const {
  if (fixes_both) return PairType::A;
  if (f_star) return PairType::B;
  if (g_star) return PairType::C;
  return std::nullopt;
}

PairClass classify_pair(const CrossPair& p, int i, int j) {
  if (i >= j) throw std::invalid_argument("classify_pair requires i < j");
  check_ij(i, j, p.f.n);
  if (!is_cross_intersecting(p)) throw std::invalid_argument("classify_pair requires a cross-intersecting pair");
  if (!is_non_trivial(p.f) || !is_non_trivial(p.g))
    throw std::invalid_argument("classify_pair requires non-trivial families");
  PairClass c;
  std::vector<Mask> sf = shift_members(p.f, i, j);
  std::vector<Mask> sg = shift_members(p.g, i, j);
  c.fixes_both = (sf == p.f.members) && (sg == p.g.members);
  c.f_star = members_form_star(sf);
  c.g_star = members_form_star(sg);
  return c;
}

long long element_sum_potential(const CrossPair& p) {
  long long s = 0;
  for (Mask m : p.f.members)
    for (int e : elements_of(m)) s += e;
  for (Mask m : p.g.members)
    for (int e : elements_of(m)) s += e;
  return s;
}

AdExtremisReport shift_ad_extremis(const CrossPair& p) {
  if (!is_cross_intersecting(p)) throw std::invalid_argument("shifting ad extremis requires a cross-intersecting pair");
  if (!is_non_trivial(p.f) || !is_non_trivial(p.g))
    throw std::invalid_argument("shifting ad extremis requires non-trivial families");

  AdExtremisReport rep;
  CrossPair cur = p;
  rep.potential_trace.push_back(element_sum_potential(cur));

  bool applied = true;
  while (applied) {
    applied = false;
    for (int i = 1; i <= cur.f.n; ++i) {
      for (int j = i + 1; j <= cur.f.n; ++j) {
        std::vector<Mask> sf = shift_members(cur.f, i, j);
        std::vector<Mask> sg = shift_members(cur.g, i, j);
        if (sf == cur.f.members && sg == cur.g.members) continue;
        const bool f_star = members_form_star(sf);
        const bool g_star = members_form_star(sg);
        if (f_star || g_star) {
          rep.skipped.push_back(
              {i, j, f_star && g_star ? StarSide::Both : (f_star ? StarSide::F : StarSide::G)});
          continue;
        }
        cur = CrossPair::make(Family::make(cur.f.n, cur.f.k, std::move(sf)),
                              Family::make(cur.g.n, cur.g.k, std::move(sg)));
        rep.shifts_applied.emplace_back(i, j);
        rep.potential_trace.push_back(element_sum_potential(cur));
        applied = true;
      }
    }
  }

  for (int i = 1; i <= cur.f.n; ++i)
    for (int j = i + 1; j <= cur.f.n; ++j) {
      PairClass c = classify_pair(cur, i, j);
      auto tag = c.primary();
      if (!tag) throw std::logic_error("ad extremis fixpoint left an unclassified pair");
      rep.classification[{i, j}] = *tag;
    }
  rep.final_pair = std::move(cur);
  return rep;
}

StructureReport structure_report(const AdExtremisReport& r) {
  StructureReport out;
  const CrossPair& p = r.final_pair;
  for (const auto& [ij, tag] : r.classification) {
    if (tag != PairType::C) continue;
    StructureEntry e;
    e.i = ij.first;
    e.j = ij.second;
    const Mask bij = element_bit(e.i) | element_bit(e.j);

    Restricted rest = restrict_family(p.f, 0, bij);
    if (rest.family.members.empty()) {
      e.rest_empty = true;
    } else if (is_star(rest.family)) {
      e.z = min_element(common_intersection(rest.family));
    } else {
      e.case_a_candidate = true;
    }

    // Closest K, H in g with traces {i} and {j} on {i,j}.
    Mask bestK = 0, bestH = 0;
    int best_overlap = -1;
    for (Mask kset : p.g.members) {
      if ((kset & bij) != element_bit(e.i)) continue;
      for (Mask hset : p.g.members) {
        if ((hset & bij) != element_bit(e.j)) continue;
        int ov = popcount(kset & hset);
        if (ov > best_overlap) {
          best_overlap = ov;
          bestK = kset;
          bestH = hset;
        }
      }
    }
    if (best_overlap >= 0) {
      Mask xs = bestK & ~bestH & ~element_bit(e.i);
      Mask ys = bestH & ~bestK & ~element_bit(e.j);
      if (xs && ys) {
        int x = min_element(xs);
        int y = min_element(ys);
        e.quadruple = std::array<int, 4>{e.i, e.j, x, y};
        const Mask z = bij | element_bit(x) | element_bit(y);
        e.quadruple_transversal = true;
        for (Mask m : p.f.members)
          if (!(m & z)) {
            e.quadruple_transversal = false;
            break;
          }
      }
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace xfam
