#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "sel/graph6.hpp"
#include "sel/search.hpp"
#include "sel/spectral.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace sel;
using namespace sel::testing;

namespace {

// Labeled brute force over every graph on n vertices, feasibility decided by
// the test-side simple-cycle packer.
struct LabeledOptima {
  std::int64_t max_edges = -1;
  double max_rho = -1;
};

LabeledOptima labeled_brute_force(int n, int k) {
  LabeledOptima out;
  for (const Graph& g : all_labeled_graphs(n)) {
    if (brute_max_cycle_packing(g) >= k) continue;
    out.max_edges = std::max(out.max_edges, g.edge_count());
    out.max_rho = std::max(out.max_rho, spectral_radius(g).rho);
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration visits the expected classes") {
  // k = 1 on 4 vertices: exactly the forests.
  std::vector<CanonicalKey> forest_keys;
  for (const Graph& r : brute_class_representatives(4))
    if (brute_is_acyclic(r)) forest_keys.push_back(canonical_form(r));
  std::sort(forest_keys.begin(), forest_keys.end());

  std::vector<CanonicalKey> visited;
  enumerate_feasible(4, 1, [&](const Graph& g) {
    visited.push_back(canonical_form(g));
  });
  std::sort(visited.begin(), visited.end());
  CHECK(visited.size() == 6);
  CHECK(visited == forest_keys);

  // k = 3: no 4-vertex graph has 2 disjoint cycles, so all 11 classes.
  std::uint64_t all4 = 0;
  enumerate_feasible(4, 3, [&](const Graph&) { ++all4; });
  CHECK(all4 == 11);

  // Every graph visited with k = 2 really has nu <= 1.
  enumerate_feasible(5, 2, [&](const Graph& g) {
    CHECK(max_cycle_packing(g).nu <= 1);
  });
}

TEST_CASE("enumeration visits each class at most once") {
  std::set<CanonicalKey> keys;
  std::uint64_t visits = 0;
  EnumStats st = enumerate_feasible(6, 2, [&](const Graph& g) {
    ++visits;
    CHECK(is_max_canonical(g));
    keys.insert(canonical_form(g));
  });
  CHECK(keys.size() == visits);
  CHECK(st.classes_visited == visits);
}

TEST_CASE("maximizers agree with unpruned labeled brute force") {
  for (int n = 4; n <= 6; ++n) {
    for (int k = 1; k <= 2; ++k) {
      LabeledOptima oracle = labeled_brute_force(n, k);
      ExtremalRecord edges = edge_maximizer(n, k);
      CHECK(static_cast<std::int64_t>(edges.optimum) == oracle.max_edges);
      ExtremalRecord spec = spectral_maximizer(n, k);
      CHECK(std::abs(spec.optimum - oracle.max_rho) < 1e-9);
    }
  }
}

TEST_CASE("spectral prune soundness at n = 7") {
  // Optimum over edge-maximal feasible graphs equals the optimum over all
  // feasible classes.
  for (int k : {1, 2}) {
    double best_all = -1;
    enumerate_feasible(7, k, [&](const Graph& g) {
      best_all = std::max(best_all, spectral_radius(g).rho);
    });
    ExtremalRecord rec = spectral_maximizer(7, k);
    CHECK(std::abs(rec.optimum - best_all) < 1e-9);
  }
}

TEST_CASE("edge maximizer results") {
  ExtremalRecord r72 = edge_maximizer(7, 2);
  CHECK(r72.exact);
  CHECK(r72.optimum == 15);  // matches (2k-1)(n-k) already at n = 7
  REQUIRE(r72.witnesses.size() == 1);
  CHECK(r72.witnesses[0].key == canonical_form(Graph::complete_split(7, 3)));

  ExtremalRecord r82 = edge_maximizer(8, 2);
  CHECK(r82.optimum == 18);
  REQUIRE(r82.witnesses.size() == 1);
  CHECK(r82.witnesses[0].key == canonical_form(Graph::complete_split(8, 3)));

  // Forests on 6 vertices peak at the 6 spanning trees.
  ExtremalRecord r61 = edge_maximizer(6, 1);
  CHECK(r61.optimum == 5);
  CHECK(r61.witnesses.size() == 6);

  // Witnesses re-checked for feasibility after the search.
  for (const SearchWitness& w : r72.witnesses)
    CHECK(!has_k_disjoint_cycles(parse_graph6(w.graph6), 2).found);
}

TEST_CASE("spectral maximizer results") {
  // Every 5-vertex graph is feasible for k = 2, so K5 wins.
  ExtremalRecord r52 = spectral_maximizer(5, 2);
  CHECK(r52.optimum == doctest::Approx(4.0).epsilon(1e-12));
  REQUIRE(r52.witnesses.size() == 1);
  CHECK(r52.witnesses[0].key == canonical_form(Graph::complete(5)));

  ExtremalRecord r72 = spectral_maximizer(7, 2);
  CHECK(std::abs(r72.optimum - closed_form_split_rho(7, 2)) < 1e-9);
  REQUIRE(r72.witnesses.size() == 1);
  CHECK(r72.witnesses[0].key == canonical_form(Graph::complete_split(7, 3)));
  CHECK(!has_k_disjoint_cycles(parse_graph6(r72.witnesses[0].graph6), 2).found);

  ExtremalRecord r61 = spectral_maximizer(6, 1);
  REQUIRE(r61.witnesses.size() == 1);
  CHECK(r61.witnesses[0].key == canonical_form(Graph::complete_split(6, 1)));
}

TEST_CASE("parallel enumeration matches serial") {
  ExtremalRecord serial = edge_maximizer(8, 2, kDefaultEnumerationCap, 1);
  ExtremalRecord par = edge_maximizer(8, 2, kDefaultEnumerationCap, 2);
  CHECK(serial.optimum == par.optimum);
  REQUIRE(serial.witnesses.size() == par.witnesses.size());
  for (std::size_t i = 0; i < serial.witnesses.size(); ++i)
    CHECK(serial.witnesses[i].key == par.witnesses[i].key);
  CHECK(serial.stats.classes_visited == par.stats.classes_visited);
  CHECK(serial.stats.candidates == par.stats.candidates);

  ExtremalRecord sspec = spectral_maximizer(8, 2, kDefaultEnumerationCap, 1);
  ExtremalRecord pspec = spectral_maximizer(8, 2, kDefaultEnumerationCap, 2);
  CHECK(sspec.optimum == pspec.optimum);
  REQUIRE(pspec.witnesses.size() == sspec.witnesses.size());
  CHECK(sspec.witnesses[0].key == pspec.witnesses[0].key);
}

TEST_CASE("enumeration caps") {
  auto noop = [](const Graph&) {};
  CHECK_THROWS_AS(enumerate_feasible(10, 1, noop), CapExceededError);
  CHECK_NOTHROW(enumerate_feasible(10, 1, noop, 10));
  CHECK_THROWS_AS(enumerate_feasible(11, 1, noop, 11), UnsupportedSizeError);
}

TEST_CASE("run_search dispatch") {
  SearchSpec spec;
  spec.n = 6;
  spec.k = 2;
  spec.objective = Objective::edges;
  ExtremalRecord edges = run_search(spec);
  CHECK(edges.exact);
  CHECK(edges.optimum == 12);

  spec.objective = Objective::spectral;
  spec.mode = SearchMode::local;
  spec.budget = 40;
  ExtremalRecord local = run_search(spec);
  CHECK(!local.exact);
  CHECK(local.optimum > 2.0);  // beats the starting path

  spec.mode = SearchMode::exhaustive;
  spec.n = 10;  // over the default cap
  CHECK_THROWS_AS(run_search(spec), CapExceededError);

  spec.mode = SearchMode::local;
  spec.objective = Objective::edges;
  CHECK_THROWS_AS(run_search(spec), InvalidParameterError);
}

TEST_CASE("hub rewire") {
  // Pendant vertex moved from its neighbor onto the hub.
  Graph g = Graph::path(4);  // 0-1-2-3
  VertexSet hub(4, {0});
  Graph out = rewire_to_hub(g, 3, 2, hub);
  CHECK(!out.has_edge(3, 2));
  CHECK(out.has_edge(3, 0));
  CHECK(out.edge_count() == g.edge_count());

  // Hub already dominated: pure deletion.
  Graph h = Graph::complete(4);
  Graph del = rewire_to_hub(h, 0, 1, VertexSet(4, {2, 3}));
  CHECK(del == h.without_edge(0, 1));

  CHECK_THROWS_AS(rewire_to_hub(g, 0, 2, hub), InvalidParameterError);
  CHECK_THROWS_AS(rewire_to_hub(g, 1, 2, VertexSet(4)),
                  InvalidParameterError);
  CHECK_THROWS_AS(rewire_to_hub(g, 1, 2, VertexSet(4, {1})),
                  InvalidParameterError);

  // Output is simple, symmetric, and differs exactly as specified.
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + static_cast<int>(rng() % 8);
    Graph r = random_graph(rng, n, 0.4);
    auto edges = edge_list(r);
    if (edges.empty()) continue;
    auto [v3, v4] = edges[rng() % edges.size()];
    VertexSet hubs = random_subset(rng, n, 0.3);
    hubs.erase(v3);
    if (hubs.empty()) continue;
    Graph res = rewire_to_hub(r, v3, v4, hubs);
    for (int u = 0; u < n; ++u) {
      CHECK(!res.has_edge(u, u));
      for (int v = u + 1; v < n; ++v) {
        bool expect = r.has_edge(u, v);
        if ((u == std::min(v3, v4) && v == std::max(v3, v4)))
          expect = false;
        else if (u == v3 || v == v3) {
          int other = (u == v3) ? v : u;
          if (hubs.contains(other) && !r.has_edge(v3, other)) expect = true;
        }
        CHECK(res.has_edge(u, v) == expect);
      }
    }
  }
}

TEST_CASE("rewire onto the hub raises the radius on a pendant instance") {
  // S_{12,3} with independent vertex 11 detached from the clique and hung
  // off another independent vertex instead.
  Graph g = Graph::complete_split(12, 3);
  for (int c = 0; c < 3; ++c) g.remove_edge(c, 11);
  g.add_edge(10, 11);
  REQUIRE(!has_k_disjoint_cycles(g, 2).found);

  PerronResult p = spectral_radius(g);
  REQUIRE(p.converged);
  VertexSet hub(12, {0, 1, 2});
  // x_{v5} > x_{v4} for some hub vertex not adjacent to the pendant.
  CHECK(p.x[0] > p.x[10]);

  Graph out = rewire_to_hub(g, 11, 10, hub);
  CHECK(out == Graph::complete_split(12, 3));
  CHECK(!has_k_disjoint_cycles(out, 2).found);
  double gain = spectral_radius(out).rho - p.rho;
  CHECK(gain > 1e-9);

  // Quadratic-form view of the same move, evaluated in g's Perron vector.
  double sum_hub = p.x[0] + p.x[1] + p.x[2];
  double qform = 2.0 * p.x[11] * (sum_hub - p.x[10]);
  CHECK(qform > 0);
  CHECK(gain >= qform - 1e-9);
}

TEST_CASE("local search") {
  // Zero budget returns the start graph.
  Graph p6 = Graph::path(6);
  ExtremalRecord r0 = local_search(p6, 2, 0, 0);
  CHECK(r0.optimum == doctest::Approx(spectral_radius(p6).rho));
  CHECK(!r0.exact);
  CHECK(parse_graph6(r0.witnesses[0].graph6) == p6);

  // The extremal graph admits no improving move.
  Graph s = Graph::complete_split(20, 3);
  ExtremalRecord rs = local_search(s, 2, 1, 0);
  CHECK(rs.graphs_examined == 0);
  CHECK(parse_graph6(rs.witnesses[0].graph6) == s);

  CHECK_THROWS_AS(local_search(Graph::complete(6), 2, 10, 0),
                  InvalidParameterError);

  // The climb from a path reaches the split-graph optimum.
  ExtremalRecord climb = local_search(Graph::path(20), 2, 500, 0);
  CHECK(std::abs(climb.optimum - closed_form_split_rho(20, 2)) < 1e-6);
  Graph best = parse_graph6(climb.witnesses[0].graph6);
  CHECK(!has_k_disjoint_cycles(best, 2).found);
}
