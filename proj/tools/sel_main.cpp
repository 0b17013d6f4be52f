#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sel/graph6.hpp"
#include "sel/report.hpp"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

// Dense power iteration is refused past this order; the analytic split
// profile covers the large-n regime.
constexpr std::int64_t kDenseLemmaCap = 10000;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void emit(const json& report) {
  std::cout << sel::dump_json_17(report) << "\n";
}

int cmd_rho(const std::string& g6, const std::vector<std::int64_t>& split,
            double tol) {
  auto t0 = Clock::now();
  json params{{"tol", tol}};
  json results;
  if (!split.empty()) {
    std::int64_t n = split[0];
    if (split[1] < 1 || split[1] > 1000000)
      throw sel::InvalidParameterError("k must be in [1, 1e6]");
    int k = static_cast<int>(split[1]);
    params["split"] = {{"n", n}, {"k", k}};
    sel::SplitSpectrum prof = sel::split_perron_profile(n, k);
    results["closed_form"] = prof.rho;
    results["profile"] = {{"rho", prof.rho}, {"a", prof.a}, {"b", prof.b}};
    if (n <= kDenseLemmaCap) {
      sel::Graph g = sel::Graph::complete_split(static_cast<int>(n), 2 * k - 1);
      sel::PerronResult p = sel::spectral_radius(g, tol);
      results.update(sel::to_json(p));
      results["n"] = g.order();
      results["edge_count"] = g.edge_count();
      results["delta"] = std::abs(p.rho - prof.rho);
      results["dense_checked"] = true;
    } else {
      results["rho"] = prof.rho;
      results["dense_checked"] = false;
    }
  } else {
    params["graph6"] = g6;
    sel::Graph g = sel::parse_graph6(g6);
    sel::PerronResult p = sel::spectral_radius(g, tol);
    results = sel::to_json(p);
    results["n"] = g.order();
    results["edge_count"] = g.edge_count();
  }
  emit(sel::make_report("rho", params, results, seconds_since(t0)));
  return kExitOk;
}

int cmd_pack(const std::string& g6, int k, std::int64_t cycle_cap) {
  auto t0 = Clock::now();
  json params{{"graph6", g6}, {"cycle_cap", cycle_cap}};
  sel::Graph g = sel::parse_graph6(g6);
  json results{{"n", g.order()}, {"edge_count", g.edge_count()}};
  bool exact = true;
  if (k > 0) {
    params["k"] = k;
    sel::DisjointCyclesResult r = sel::has_k_disjoint_cycles(g, k, cycle_cap);
    results.update(sel::to_json(r, k));
    exact = r.exact;
  } else {
    sel::PackingResult r = sel::max_cycle_packing(g, cycle_cap);
    results.update(sel::to_json(r));
    exact = r.exact;
  }
  emit(sel::make_report("pack", params, results, seconds_since(t0)));
  return exact ? kExitOk : kExitCap;
}

int cmd_search(int n, int k, bool edges, std::string mode,
               std::uint64_t seed, std::int64_t budget, int jobs, int cap) {
  auto t0 = Clock::now();
  sel::SearchSpec spec;
  spec.n = n;
  spec.k = k;
  spec.objective = edges ? sel::Objective::edges : sel::Objective::spectral;
  spec.seed = seed;
  spec.cap = cap;
  spec.jobs = jobs;
  spec.budget = budget;
  if (mode == "local")
    spec.mode = sel::SearchMode::local;
  else if (mode == "exhaustive")
    spec.mode = sel::SearchMode::exhaustive;
  else
    throw sel::InvalidParameterError("mode must be exhaustive or local");

  json params{{"n", n},
              {"k", k},
              {"objective", edges ? "edges" : "spectral-radius"},
              {"mode", mode},
              {"seed", seed},
              {"jobs", jobs},
              {"cap", cap}};

  sel::ExtremalRecord rec = sel::run_search(spec);
  json results;
  if (spec.mode == sel::SearchMode::local) {
    params["budget"] = budget;
    // Infeasibility diagnostic on the climbed graph: a K_{2k,2k} on R''
    // would mean k disjoint quadrilaterals.
    sel::Graph best = sel::parse_graph6(rec.witnesses.front().graph6);
    sel::PerronResult p = sel::spectral_radius(best);
    if (p.converged) {
      sel::ThresholdSets t = sel::compute_thresholds(best, p, k);
      results["hub_biclique_found"] =
          sel::check_common_neighborhood_kkk(t, best, k).found;
    }
  }

  results["record"] = sel::to_json(rec);
  if (spec.objective == sel::Objective::edges) {
    std::int64_t predicted = sel::erdos_posa_edge_bound(n, k);
    results["predicted"] = predicted;
    if (rec.exact)
      results["match"] =
          static_cast<std::int64_t>(rec.optimum) == predicted;
  } else {
    double predicted = sel::closed_form_split_rho(n, k);
    results["predicted"] = predicted;
    if (rec.exact)
      results["match"] = std::abs(rec.optimum - predicted) <=
                         1e-9 * std::max(1.0, predicted);
  }
  std::int64_t scale = sel::asymptotic_threshold_n(std::max(k, 1));
  results["theorem_scale_n"] = scale;
  bool at_scale = k >= 2 && n >= scale;
  results["theorem_scale_met"] = at_scale;
  if (!at_scale && spec.objective == sel::Objective::spectral)
    results["regime_note"] =
        "empirical extension: n is below the scale where the spectral bound "
        "is proven";
  emit(sel::make_report("search", params, results, seconds_since(t0)));
  return kExitOk;
}

int cmd_lemmas(std::int64_t n, int k, bool analytic) {
  auto t0 = Clock::now();
  json params{{"n", n}, {"k", k}, {"analytic", analytic}};
  json results{{"n", n},
               {"k", k},
               {"lambda", sel::threshold_lambda(k)},
               {"mode", analytic ? "analytic" : "dense"}};
  results["hypothesis"] = {
      {"threshold_n", sel::asymptotic_threshold_n(k)},
      {"met", k >= 2 && n >= sel::asymptotic_threshold_n(k)}};

  sel::LemmaReport rep;
  if (analytic) {
    sel::SplitThresholdStructure s = sel::split_threshold_structure(n, k);
    results["structure"] = sel::to_json(s);
    rep = sel::verify_lemma_bounds(s);
  } else {
    if (n > kDenseLemmaCap)
      throw sel::CapExceededError(
          "dense mode supports n <= " + std::to_string(kDenseLemmaCap) +
          "; use --analytic");
    sel::Graph g = sel::Graph::complete_split(static_cast<int>(n), 2 * k - 1);
    sel::PerronResult p = sel::spectral_radius(g);
    sel::ThresholdSets t = sel::compute_thresholds(g, p, k);
    results["rho"] = p.rho;
    results["residual"] = p.residual;
    results["structure"] = sel::to_json(t, /*include_members=*/n <= 1000);
    rep = sel::verify_lemma_bounds(t, g, k);
  }
  results["report"] = sel::to_json(rep);
  emit(sel::make_report("lemmas", params, results, seconds_since(t0)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sel: spectral and edge extremal workbench for graphs without k "
      "vertex-disjoint cycles"};
  app.require_subcommand(1);

  // rho
  auto* rho = app.add_subcommand(
      "rho", "Spectral radius and Perron vector of a graph");
  std::string rho_g6;
  std::vector<std::int64_t> rho_split;
  double rho_tol = sel::kDefaultSpectralTol;
  auto* og6 = rho->add_option("--g6", rho_g6, "graph6 input");
  auto* osplit =
      rho->add_option("--split", rho_split,
                      "complete split graph S_{n,2k-1}: takes n k")
          ->expected(2);
  og6->excludes(osplit);
  rho->add_option("--tol", rho_tol, "convergence tolerance");

  // pack
  auto* pack = app.add_subcommand(
      "pack", "Maximum vertex-disjoint cycle packing");
  std::string pack_g6;
  int pack_k = 0;
  std::int64_t pack_cap = sel::kDefaultCycleCap;
  pack->add_option("--g6", pack_g6, "graph6 input")->required();
  pack->add_option("--k", pack_k, "decide nu >= k instead of computing nu")
      ->check(CLI::PositiveNumber);
  pack->add_option("--cap", pack_cap, "chordless cycle cap")
      ->check(CLI::PositiveNumber);

  // search
  auto* search = app.add_subcommand(
      "search", "Extremal search over graphs with no k disjoint cycles");
  int s_n = 0, s_k = 1, s_jobs = 1;
  int s_cap = sel::kDefaultEnumerationCap;
  bool s_edges = false, s_spectral = false;
  std::string s_mode = "exhaustive";
  std::uint64_t s_seed = 0;
  std::int64_t s_budget = 10000;
  search->add_option("n", s_n, "graph order")->required();
  search->add_option("k", s_k, "forbidden number of disjoint cycles")
      ->required();
  auto* fe = search->add_flag("--edges", s_edges, "maximize edge count");
  auto* fs =
      search->add_flag("--spectral", s_spectral, "maximize spectral radius");
  fe->excludes(fs);
  search->add_option("--mode", s_mode, "exhaustive | local");
  search->add_option("--seed", s_seed, "seed for local-search restarts");
  search->add_option("--budget", s_budget, "local-search move budget");
  search->add_option("--jobs", s_jobs, "worker threads for enumeration");
  auto* cap_opt = search->add_option(
      "--cap", s_cap,
      "enumeration cap override; runs past the default accept long runtimes");

  // lemmas
  auto* lem = app.add_subcommand(
      "lemmas", "Threshold-set structure and bound checks on S_{n,2k-1}");
  std::int64_t l_n = 0;
  int l_k = 1;
  bool l_analytic = false;
  lem->add_option("n", l_n, "graph order")->required();
  lem->add_option("k", l_k, "parameter k")->required();
  lem->add_flag("--analytic", l_analytic,
                "use the two-valued eigenvector profile (any n)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (rho->parsed()) {
      if (rho_g6.empty() && rho_split.empty())
        throw sel::InvalidParameterError("rho needs --g6 or --split");
      return cmd_rho(rho_g6, rho_split, rho_tol);
    }
    if (pack->parsed()) return cmd_pack(pack_g6, pack_k, pack_cap);
    if (search->parsed()) {
      if (s_edges == s_spectral)
        throw sel::InvalidParameterError(
            "search needs exactly one of --edges / --spectral");
      if (!*cap_opt) {
        if (const char* env = std::getenv("SEL_CAP_OVERRIDE"))
          s_cap = std::atoi(env);
      }
      return cmd_search(s_n, s_k, s_edges, s_mode, s_seed,
                        s_budget, s_jobs, s_cap);
    }
    if (lem->parsed()) return cmd_lemmas(l_n, l_k, l_analytic);
  } catch (const sel::Graph6ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const sel::InvalidParameterError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const sel::CapExceededError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const sel::UnsupportedSizeError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
