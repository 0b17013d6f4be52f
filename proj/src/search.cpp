#include "sel/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "sel/graph6.hpp"
#include "sel/spectral.hpp"
#include "sel/thresholds.hpp"

namespace sel {

namespace {

std::pair<int, int> decode_edge(int idx) {
  int p = 1;
  while ((p + 1) * p / 2 <= idx) ++p;
  return {idx - p * (p - 1) / 2, p};
}

void check_enumeration_size(int n, int cap) {
  if (n < 1) throw InvalidParameterError("n must be >= 1");
  if (n > kCanonicalCap)
    throw UnsupportedSizeError("exhaustive search supports n <= " +
                               std::to_string(kCanonicalCap));
  if (n > cap)
    throw CapExceededError(
        "n = " + std::to_string(n) + " exceeds the enumeration cap " +
        std::to_string(cap) + "; raise it explicitly to accept the runtime");
}

// One enumeration node. `edge_maximal` is only computed when requested:
// true iff no single-edge extension anywhere stays feasible.
struct NodeCallback {
  bool need_maximality = false;
  // worker index, representative graph, edge-maximal flag
  std::function<void(int, const Graph&, bool)> fn;
};

struct EnumDriver {
  int n;
  int k;
  int total_edges;
  const NodeCallback& cb;

  void rec(int worker, Graph& g, int last_idx, EnumStats& stats) const {
    ++stats.classes_visited;
    bool any_feasible_ext = false;
    // Children first: their feasibility doubles as most of the
    // edge-maximality scan.
    for (int idx = last_idx + 1; idx < total_edges; ++idx) {
      auto [q, p] = decode_edge(idx);
      g.add_edge(q, p);
      ++stats.candidates;
      if (detail::small_graph_has_k_disjoint(g, k)) {
        ++stats.infeasible_pruned;
      } else {
        any_feasible_ext = true;
        if (is_max_canonical(g)) {
          rec(worker, g, idx, stats);
        } else {
          ++stats.noncanonical_rejected;
        }
      }
      g.remove_edge(q, p);
    }
    bool maximal = false;
    if (cb.need_maximality && !any_feasible_ext) {
      maximal = true;
      for (int idx = 0; idx <= last_idx && maximal; ++idx) {
        auto [q, p] = decode_edge(idx);
        if (g.has_edge(q, p)) continue;
        g.add_edge(q, p);
        if (!detail::small_graph_has_k_disjoint(g, k)) maximal = false;
        g.remove_edge(q, p);
      }
    }
    cb.fn(worker, g, maximal);
  }

  // Frontier of canonical feasible graphs with exactly `depth` edges;
  // everything shallower is visited inline.
  void collect(Graph& g, int last_idx, int depth,
               std::vector<std::vector<int>>& frontier, std::vector<int>& cur,
               EnumStats& stats) const {
    if (depth == 0) {
      frontier.push_back(cur);
      return;
    }
    ++stats.classes_visited;
    bool any_feasible_ext = false;
    for (int idx = last_idx + 1; idx < total_edges; ++idx) {
      auto [q, p] = decode_edge(idx);
      g.add_edge(q, p);
      ++stats.candidates;
      if (detail::small_graph_has_k_disjoint(g, k)) {
        ++stats.infeasible_pruned;
      } else {
        any_feasible_ext = true;
        if (is_max_canonical(g)) {
          cur.push_back(idx);
          collect(g, idx, depth - 1, frontier, cur, stats);
          cur.pop_back();
        } else {
          ++stats.noncanonical_rejected;
        }
      }
      g.remove_edge(q, p);
    }
    bool maximal = false;
    if (cb.need_maximality && !any_feasible_ext) {
      maximal = true;
      for (int idx = 0; idx <= last_idx && maximal; ++idx) {
        auto [q, p] = decode_edge(idx);
        if (g.has_edge(q, p)) continue;
        g.add_edge(q, p);
        if (!detail::small_graph_has_k_disjoint(g, k)) maximal = false;
        g.remove_edge(q, p);
      }
    }
    cb.fn(0, g, maximal);
  }
};

EnumStats run_enumeration(int n, int k, int jobs, const NodeCallback& cb) {
  EnumDriver driver{n, k, n * (n - 1) / 2, cb};
  EnumStats stats;
  Graph g(n);
  if (jobs <= 1) {
    driver.rec(0, g, -1, stats);
    return stats;
  }

  // Split work at a fixed depth; subtrees are independent and the per-worker
  // reductions merge associatively, so the result is schedule-independent.
  constexpr int kSplitDepth = 6;
  std::vector<std::vector<int>> frontier;
  std::vector<int> cur;
  driver.collect(g, -1, kSplitDepth, frontier, cur, stats);

  std::vector<EnumStats> wstats(static_cast<std::size_t>(jobs));
  std::atomic<std::size_t> next{0};
  auto work = [&](int w) {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= frontier.size()) break;
      Graph sub(n);
      for (int idx : frontier[i]) {
        auto [q, p] = decode_edge(idx);
        sub.add_edge(q, p);
      }
      driver.rec(w, sub, frontier[i].back(), wstats[static_cast<std::size_t>(w)]);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  for (std::thread& t : pool) t.join();
  for (const EnumStats& s : wstats) stats += s;
  return stats;
}

SearchWitness make_witness(const Graph& g, double rho = 0) {
  SearchWitness w;
  if (g.order() <= kCanonicalCap) {
    w.key = canonical_form(g);
    w.graph6 = write_graph6(graph_from_key(w.key));
  } else {
    w.graph6 = write_graph6(g);  // key stays empty past the canonical cap
  }
  w.rho = rho;
  return w;
}

// Local search reports the graph it actually holds; the key still names the
// class when the order allows it.
SearchWitness make_witness_verbatim(const Graph& g, double rho) {
  SearchWitness w;
  if (g.order() <= kCanonicalCap) w.key = canonical_form(g);
  w.graph6 = write_graph6(g);
  w.rho = rho;
  return w;
}

void sort_witnesses(std::vector<SearchWitness>& ws) {
  std::sort(ws.begin(), ws.end(), [](const SearchWitness& a,
                                     const SearchWitness& b) {
    return a.key < b.key;
  });
}

}  // namespace

EnumStats enumerate_feasible(int n, int k,
                             const std::function<void(const Graph&)>& visit,
                             int cap) {
  check_enumeration_size(n, cap);
  if (k < 1) throw InvalidParameterError("k must be >= 1");
  NodeCallback cb;
  cb.need_maximality = false;
  cb.fn = [&](int, const Graph& g, bool) { visit(g); };
  return run_enumeration(n, k, 1, cb);
}

ExtremalRecord edge_maximizer(int n, int k, int cap, int jobs) {
  check_enumeration_size(n, cap);
  if (k < 1) throw InvalidParameterError("k must be >= 1");
  jobs = std::max(1, jobs);

  struct Acc {
    std::int64_t best = -1;
    std::vector<SearchWitness> witnesses;
  };
  std::vector<Acc> accs(static_cast<std::size_t>(jobs));

  NodeCallback cb;
  cb.need_maximality = false;
  cb.fn = [&](int w, const Graph& g, bool) {
    Acc& a = accs[static_cast<std::size_t>(w)];
    std::int64_t m = g.edge_count();
    if (m > a.best) {
      a.best = m;
      a.witnesses.clear();
    }
    if (m == a.best) a.witnesses.push_back(make_witness(g));
  };
  EnumStats stats = run_enumeration(n, k, jobs, cb);

  ExtremalRecord rec;
  rec.objective = Objective::edges;
  rec.stats = stats;
  rec.graphs_examined = stats.classes_visited;
  rec.exact = true;
  std::int64_t best = -1;
  for (const Acc& a : accs) best = std::max(best, a.best);
  for (const Acc& a : accs)
    if (a.best == best)
      rec.witnesses.insert(rec.witnesses.end(), a.witnesses.begin(),
                           a.witnesses.end());
  sort_witnesses(rec.witnesses);
  rec.optimum = static_cast<double>(best);
  return rec;
}

ExtremalRecord spectral_maximizer(int n, int k, int cap, int jobs) {
  check_enumeration_size(n, cap);
  if (k < 1) throw InvalidParameterError("k must be >= 1");
  jobs = std::max(1, jobs);

  struct Entry {
    double rho;
    SearchWitness witness;
  };
  struct Acc {
    double best = -1;
    std::vector<Entry> near;  // everything within tolerance of local best
    std::uint64_t evals = 0;
  };
  std::vector<Acc> accs(static_cast<std::size_t>(jobs));

  NodeCallback cb;
  cb.need_maximality = true;
  cb.fn = [&](int w, const Graph& g, bool maximal) {
    if (!maximal) return;
    Acc& a = accs[static_cast<std::size_t>(w)];
    double rho = spectral_radius(g).rho;
    ++a.evals;
    if (rho > a.best) a.best = rho;
    if (rho >= a.best * (1.0 - kSpectralTieTolerance))
      a.near.push_back({rho, make_witness(g, rho)});
  };
  EnumStats stats = run_enumeration(n, k, jobs, cb);

  ExtremalRecord rec;
  rec.objective = Objective::spectral;
  rec.stats = stats;
  rec.graphs_examined = stats.classes_visited;
  rec.exact = true;
  double best = -1;
  for (const Acc& a : accs) {
    best = std::max(best, a.best);
    rec.rho_evaluations += a.evals;
  }
  for (const Acc& a : accs)
    for (const Entry& e : a.near)
      if (e.rho >= best * (1.0 - kSpectralTieTolerance))
        rec.witnesses.push_back(e.witness);
  sort_witnesses(rec.witnesses);
  rec.optimum = best;
  return rec;
}

Graph rewire_to_hub(const Graph& g, int v, int dropped_neighbor,
                    const VertexSet& hub) {
  if (!g.has_edge(v, dropped_neighbor))
    throw InvalidParameterError("rewire requires an existing edge");
  if (hub.empty()) throw InvalidParameterError("hub must be nonempty");
  if (hub.contains(v))
    throw InvalidParameterError("hub may not contain the rewired vertex");
  VertexSet additions = hub - g.neighborhood(v);
  Graph out = g.without_edge(v, dropped_neighbor);
  additions.for_each([&](int u) { out.add_edge(v, u); });
  return out;
}

ExtremalRecord local_search(const Graph& g0, int k, std::int64_t budget,
                            std::uint64_t seed) {
  if (k < 1) throw InvalidParameterError("k must be >= 1");
  if (has_k_disjoint_cycles(g0, k).found)
    throw InvalidParameterError(
        "start graph already contains k disjoint cycles");

  const int n = g0.order();
  std::mt19937_64 rng(seed);
  Graph cur = g0;
  double cur_rho = spectral_radius(cur).rho;
  Graph best = cur;
  double best_rho = cur_rho;
  std::int64_t moves_left = budget;
  std::uint64_t evals = 0;

  auto try_graph = [&](const Graph& cand, double* rho_out) {
    if (has_k_disjoint_cycles(cand, k).found) return false;
    ++evals;
    *rho_out = spectral_radius(cand).rho;
    return *rho_out > cur_rho + 1e-10;
  };

  while (moves_left > 0) {
    bool improved = false;

    // Edge additions in lexicographic order. Toggling an edge off can never
    // raise the radius (the adjacency matrix only loses entries), so only
    // the "on" half of the toggle space needs evaluating.
    for (int u = 0; u < n && !improved; ++u) {
      for (int v = u + 1; v < n && !improved; ++v) {
        if (cur.has_edge(u, v)) continue;
        Graph cand = cur.with_edge(u, v);
        double rho;
        if (try_graph(cand, &rho)) {
          cur = std::move(cand);
          cur_rho = rho;
          improved = true;
        }
      }
    }

    // Hub rewires aimed at the current R'', low-Perron vertices first.
    if (!improved) {
      PerronResult p = spectral_radius(cur);
      if (p.converged) {
        ThresholdSets t = compute_thresholds(cur, p, k);
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
          if (p.x[a] != p.x[b]) return p.x[a] < p.x[b];
          return a < b;
        });
        for (int v3 : order) {
          if (improved) break;
          if (t.r_dprime.contains(v3)) continue;
          for (int v4 = 0; v4 < n && !improved; ++v4) {
            if (!cur.has_edge(v3, v4)) continue;
            Graph cand = rewire_to_hub(cur, v3, v4, t.r_dprime);
            double rho;
            if (try_graph(cand, &rho)) {
              cur = std::move(cand);
              cur_rho = rho;
              improved = true;
            }
          }
        }
      }
    }

    if (improved) {
      --moves_left;
      if (cur_rho > best_rho) {
        best = cur;
        best_rho = cur_rho;
      }
      continue;
    }

    // Local optimum: seeded perturbation restart from the best graph found,
    // dropping a few edges (feasibility survives deletion).
    if (cur_rho > best_rho) {
      best = cur;
      best_rho = cur_rho;
    }
    if (--moves_left <= 0) break;
    cur = best;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (cur.has_edge(u, v)) edges.emplace_back(u, v);
    if (edges.empty()) break;
    int drops = 1 + static_cast<int>(rng() % 3);
    for (int d = 0; d < drops && !edges.empty(); ++d) {
      std::size_t i = rng() % edges.size();
      cur.remove_edge(edges[i].first, edges[i].second);
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
    }
    cur_rho = spectral_radius(cur).rho;
  }

  if (cur_rho > best_rho) {
    best = cur;
    best_rho = cur_rho;
  }

  ExtremalRecord rec;
  rec.objective = Objective::spectral;
  rec.optimum = best_rho;
  rec.witnesses.push_back(make_witness_verbatim(best, best_rho));
  rec.graphs_examined = evals;
  rec.rho_evaluations = evals;
  rec.exact = false;
  return rec;
}

ExtremalRecord run_search(const SearchSpec& spec) {
  if (spec.mode == SearchMode::local) {
    if (spec.objective != Objective::spectral)
      throw InvalidParameterError("local mode climbs spectral radius");
    return local_search(Graph::path(spec.n), spec.k, spec.budget, spec.seed);
  }
  return spec.objective == Objective::edges
             ? edge_maximizer(spec.n, spec.k, spec.cap, spec.jobs)
             : spectral_maximizer(spec.n, spec.k, spec.cap, spec.jobs);
}

}  // namespace sel
