// xfam: a command-line laboratory for cross-intersecting set families.
// Subcommands cover the closed-form bound table, the named constructions,
// predicate checks, shifting, transversals, the prefix injection, exhaustive
// search, and the full verification suite. Families travel as JSON.
//
// Exit codes: 0 success / check passed, 1 check failed, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "xfam/acceptance.hpp"
#include "xfam/bounds.hpp"
#include "xfam/constructions.hpp"
#include "xfam/downset.hpp"
#include "xfam/family.hpp"
#include "xfam/json_io.hpp"
#include "xfam/phi_map.hpp"
#include "xfam/search.hpp"
#include "xfam/shifting.hpp"
#include "xfam/transversal.hpp"

namespace {

using nlohmann::json;
using namespace xfam;

constexpr const char* kVersion = "0.1.0";

void emit(const std::string& out_path, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    atomic_write_text(out_path, text);
}

int default_jobs() {
  if (const char* env = std::getenv("XFAM_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

int cmd_bounds(int n, int k, int l, const std::string& out_path) {
  std::ostringstream csv;
  csv << "n,k,l,ekr,hm,ft,h_nk,h_nkl,g_nkl,initial,product,product_theorem_range\n";
  auto cell = [](auto fn) -> std::string {
    try {
      return std::to_string(fn());
    } catch (const std::invalid_argument&) {
      return "NA";
    }
  };
  csv << n << "," << k << "," << l;
  csv << "," << cell([&] { return ekr_bound(n, k); });
  csv << "," << cell([&] { return hm_bound(n, k); });
  csv << "," << cell([&] { return ft_bound(n, k, l); });
  csv << "," << cell([&] { return h_nk(n, k); });
  csv << "," << cell([&] { return h_nkl(n, k, l); });
  csv << "," << cell([&] { return g_nkl(n, k, l); });
  csv << "," << cell([&] { return initial_bound(n, k); });
  csv << "," << cell([&] { return product_bound(n, k); });
  csv << "," << (product_bound_in_theorem_range(n, k) ? "true" : "false") << "\n";
  if (out_path.empty())
    std::cout << csv.str();
  else
    atomic_write_text(out_path, csv.str());
  return 0;
}

int cmd_construct(const std::string& name, int n, int k, int l, int center,
                  const std::string& out_path) {
  json j;
  if (name == "star") {
    j = family_to_json(full_star(n, k, center));
  } else if (name == "hm") {
    j = family_to_json(hilton_milner(n, k));
  } else if (name == "triangle") {
    j = family_to_json(triangle_family(n, k == 0 ? 3 : k));
  } else if (name == "disjoint-pair") {
    j = pair_to_json(disjoint_pair_construction(n, k, l));
  } else if (name == "initial-pair") {
    j = pair_to_json(initial_extremal_pair(n, k, l));
  } else if (name == "k2-extras") {
    j["pairs"] = json::array();
    for (const CrossPair& p : k2_extra_optima(n)) j["pairs"].push_back(pair_to_json(p));
  } else {
    throw CLI::ValidationError("--name", "unknown construction '" + name + "'");
  }
  emit(out_path, j);
  return 0;
}

int cmd_check(const std::string& family_path, const std::string& pair_path,
              const std::string& predicate) {
  bool result = false;
  if (predicate == "cross-intersecting" || predicate == "saturated") {
    if (pair_path.empty()) throw CLI::ValidationError("--pair", "predicate needs a pair file");
    CrossPair p = pair_from_json(load_json_file(pair_path));
    result = predicate == "saturated" ? is_saturated(p) : is_cross_intersecting(p);
  } else {
    if (family_path.empty()) throw CLI::ValidationError("--family", "predicate needs a family file");
    Family f = family_from_json(load_json_file(family_path));
    if (predicate == "intersecting")
      result = is_intersecting(f);
    else if (predicate == "non-trivial")
      result = is_non_trivial(f);
    else if (predicate == "initial")
      result = is_initial(f);
    else
      throw CLI::ValidationError("--predicate", "unknown predicate '" + predicate + "'");
  }
  std::cout << (result ? "true" : "false") << "\n";
  return result ? 0 : 1;
}

int cmd_shift(const std::string& family_path, int i, int j, bool to_initial,
              const std::string& out_path) {
  Family f = family_from_json(load_json_file(family_path));
  Family out = to_initial ? shift_to_initial(f) : shift_family(f, i, j);
  emit(out_path, family_to_json(out));
  return 0;
}

int cmd_adextremis(const std::string& pair_path, const std::string& report_path) {
  CrossPair p = pair_from_json(load_json_file(pair_path));
  AdExtremisReport rep = shift_ad_extremis(p);
  emit(report_path, report_to_json(rep));
  return 0;
}

int cmd_transversal(const std::string& family_path, int t, bool allow_empty,
                    const std::string& out_path) {
  Family f = family_from_json(load_json_file(family_path));
  emit(out_path, family_to_json(transversal_family(f, t, full_mask(f.n), allow_empty)));
  return 0;
}

int cmd_saturate(const std::string& pair_path, const std::string& out_path) {
  CrossPair p = pair_from_json(load_json_file(pair_path));
  emit(out_path, pair_to_json(saturate(p)));
  return 0;
}

int cmd_phi(const std::string& pair_path, const std::string& out_path) {
  CrossPair p = pair_from_json(load_json_file(pair_path));
  PhiReport rep = verify_phi_injection(p);
  json j;
  j["p_values"] = json::array();
  for (const PhiRecord& r : rep.records)
    j["p_values"].push_back(
        {{"set", elements_of(r.g)}, {"p", r.p}, {"image", elements_of(r.image)}});
  j["sizes_ok"] = rep.sizes_ok;
  j["injective"] = rep.injective;
  j["disjoint_from_f"] = rep.disjoint_from_f;
  j["meets_prefix"] = rep.meets_prefix;
  j["orientation_swapped"] = rep.swapped;
  emit(out_path, j);
  return rep.all_ok() ? 0 : 1;
}

int cmd_search(int n, int k, int l, const std::string& objective, const std::string& constraint,
               int min_g, const std::string& strategy, int jobs, long long node_budget,
               long long time_budget_ms, const std::string& out_path) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.l = l;
  cfg.min_g = min_g;
  cfg.jobs = jobs;
  cfg.node_budget = node_budget;
  cfg.time_budget_ms = time_budget_ms;
  if (objective == "sum")
    cfg.objective = Objective::Sum;
  else if (objective == "product")
    cfg.objective = Objective::Product;
  else
    throw CLI::ValidationError("--objective", "expected sum|product");
  if (constraint == "nontrivial")
    cfg.constraint = Constraint::NontrivialBoth;
  else if (constraint == "nontrivial-initial")
    cfg.constraint = Constraint::NontrivialBothInitial;
  else if (constraint == "ci-min-g")
    cfg.constraint = Constraint::CiOnlyMinG;
  else
    throw CLI::ValidationError("--constraint", "expected nontrivial|nontrivial-initial|ci-min-g");
  if (strategy == "exhaustive-g")
    cfg.strategy = Strategy::ExhaustiveG;
  else if (strategy == "initial-downsets")
    cfg.strategy = Strategy::InitialDownsets;
  else if (strategy == "branch-and-bound")
    cfg.strategy = Strategy::BranchAndBound;
  else
    throw CLI::ValidationError("--strategy", "expected exhaustive-g|initial-downsets|branch-and-bound");
  SearchResult r = max_pair(cfg);
  emit(out_path, search_result_to_json(cfg, r));
  return 0;
}

int cmd_verify_suite(const std::string& scale, int jobs, const std::string& command_line,
                     const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<acceptance::CheckOutcome> checks =
      scale == "full" ? acceptance::run_full(jobs) : acceptance::run_small(jobs);
  bool all_pass = true;
  json jchecks = json::array();
  for (const auto& c : checks) {
    if (c.outcome == "FAIL") all_pass = false;
    std::cout << c.outcome << "  " << c.name;
    if (!c.detail.empty()) std::cout << " --" << c.detail;
    std::cout << "  (" << c.wall_ms << " ms)\n";
    jchecks.push_back(
        {{"name", c.name}, {"outcome", c.outcome}, {"detail", c.detail}, {"ms", c.wall_ms}});
  }
  const long long wall =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  std::ostringstream hash;
  hash << std::hex << fnv1a(command_line);
  json manifest{{"command_line", command_line},
                {"config_hash", hash.str()},
                {"artifact_version", kVersion},
                {"scale", scale},
                {"jobs", jobs},
                {"wall_time_ms", wall},
                {"checks", jchecks}};
  if (!out_path.empty()) atomic_write_text(out_path, manifest.dump(2) + "\n");
  std::cout << (all_pass ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cross-intersecting set-family laboratory"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string out_path, family_path, pair_path, predicate, name;
  int n = 0, k = 0, l = 0, center = 1, si = 0, sj = 0, t = 2, min_g = 1;
  int jobs = default_jobs();
  long long node_budget = -1, time_budget_ms = -1;
  bool to_initial = false, allow_empty = false;
  std::string objective = "sum", constraint = "nontrivial", strategy = "exhaustive-g";
  std::string scale = "small";

  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound table as CSV");
  bounds_cmd->add_option("--n", n)->required();
  bounds_cmd->add_option("--k", k)->required();
  bounds_cmd->add_option("--l", l)->required();
  bounds_cmd->add_option("--out", out_path);

  auto* construct_cmd = app.add_subcommand("construct", "emit a named family or pair");
  construct_cmd->add_option("--name", name, "star|hm|triangle|disjoint-pair|initial-pair|k2-extras")
      ->required();
  construct_cmd->add_option("--n", n)->required();
  construct_cmd->add_option("--k", k);
  construct_cmd->add_option("--l", l);
  construct_cmd->add_option("--center", center);
  construct_cmd->add_option("--out", out_path);

  auto* check_cmd = app.add_subcommand("check", "evaluate a predicate; exit 0 iff it holds");
  check_cmd->add_option("--family", family_path);
  check_cmd->add_option("--pair", pair_path);
  check_cmd->add_option("--predicate", predicate,
                        "intersecting|non-trivial|initial|cross-intersecting|saturated")
      ->required();

  auto* shift_cmd = app.add_subcommand("shift", "apply one shift or the full initial closure");
  shift_cmd->add_option("--family", family_path)->required();
  shift_cmd->add_option("--i", si);
  shift_cmd->add_option("--j", sj);
  shift_cmd->add_flag("--to-initial", to_initial);
  shift_cmd->add_option("--out", out_path);

  auto* adex_cmd = app.add_subcommand("adextremis", "run shifting ad extremis on a pair");
  adex_cmd->add_option("--pair", pair_path)->required();
  adex_cmd->add_option("--report", out_path);

  auto* trans_cmd = app.add_subcommand("transversal", "t-sets meeting every member");
  trans_cmd->add_option("--family", family_path)->required();
  trans_cmd->add_option("--t", t)->required();
  trans_cmd->add_flag("--allow-empty", allow_empty, "vacuous convention for an empty family");
  trans_cmd->add_option("--out", out_path);

  auto* sat_cmd = app.add_subcommand("saturate", "close a pair under mutual transversals");
  sat_cmd->add_option("--pair", pair_path)->required();
  sat_cmd->add_option("--out", out_path);

  auto* phi_cmd = app.add_subcommand("phi", "verify the prefix injection on an initial pair");
  phi_cmd->add_option("--pair", pair_path)->required();
  phi_cmd->add_flag("--verify", "verification is always performed; flag kept for symmetry");
  phi_cmd->add_option("--out", out_path);

  auto* search_cmd = app.add_subcommand("search", "maximize |F|+|G| or |F|*|G|");
  search_cmd->add_option("--n", n)->required();
  search_cmd->add_option("--k", k)->required();
  search_cmd->add_option("--l", l)->required();
  search_cmd->add_option("--objective", objective, "sum|product");
  search_cmd->add_option("--constraint", constraint, "nontrivial|nontrivial-initial|ci-min-g");
  search_cmd->add_option("--min-g", min_g);
  search_cmd->add_option("--strategy", strategy, "exhaustive-g|initial-downsets|branch-and-bound");
  search_cmd->add_option("--jobs", jobs);
  search_cmd->add_option("--node-budget", node_budget);
  search_cmd->add_option("--time-budget-ms", time_budget_ms);
  search_cmd->add_option("--out", out_path);

  auto* suite_cmd = app.add_subcommand("verify-suite", "run the whole verification matrix");
  suite_cmd->add_option("--scale", scale, "small|full");
  suite_cmd->add_option("--jobs", jobs);
  suite_cmd->add_option("--out", out_path, "manifest JSON path");

  std::ostringstream cmdline;
  for (int i = 0; i < argc; ++i) cmdline << (i ? " " : "") << argv[i];

  try {
    app.parse(argc, argv);
    if (bounds_cmd->parsed()) return cmd_bounds(n, k, l, out_path);
    if (construct_cmd->parsed()) return cmd_construct(name, n, k, l, center, out_path);
    if (check_cmd->parsed()) return cmd_check(family_path, pair_path, predicate);
    if (shift_cmd->parsed()) {
      if (!to_initial && (si == 0 || sj == 0))
        throw CLI::ValidationError("shift", "needs --i and --j, or --to-initial");
      return cmd_shift(family_path, si, sj, to_initial, out_path);
    }
    if (adex_cmd->parsed()) return cmd_adextremis(pair_path, out_path);
    if (trans_cmd->parsed()) return cmd_transversal(family_path, t, allow_empty, out_path);
    if (sat_cmd->parsed()) return cmd_saturate(pair_path, out_path);
    if (phi_cmd->parsed()) return cmd_phi(pair_path, out_path);
    if (search_cmd->parsed())
      return cmd_search(n, k, l, objective, constraint, min_g, strategy, jobs, node_budget,
                        time_budget_ms, out_path);
    if (suite_cmd->parsed()) return cmd_verify_suite(scale, jobs, cmdline.str(), out_path);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
