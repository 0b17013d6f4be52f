#include <doctest.h>

#include <random>

#include "sel/cycles.hpp"
#include "sel/search.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace sel;
using namespace sel::testing;

TEST_CASE("chordless cycle enumeration on named graphs") {
  auto c5 = enumerate_chordless_cycles(Graph::cycle(5));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].vertices.size() == 5);

  // Every 4-cycle of K4 has a chord.
  auto k4 = enumerate_chordless_cycles(Graph::complete(4));
  CHECK(k4.size() == 4);
  for (const auto& c : k4) CHECK(c.vertices.size() == 3);

  int len5 = 0, shorter = 0;
  for (const auto& c : enumerate_chordless_cycles(petersen())) {
    if (c.vertices.size() == 5) ++len5;
    if (c.vertices.size() < 5) ++shorter;
  }
  CHECK(len5 == 12);
  CHECK(shorter == 0);
}

TEST_CASE("chordless cycles are chordless, unique, and deterministic") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng() % 7);
    Graph g = random_graph(rng, n, 0.45);
    auto cycles = enumerate_chordless_cycles(g);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const auto& c = cycles[i];
      std::size_t len = c.vertices.size();
      REQUIRE(len >= 3);
      for (std::size_t a = 0; a < len; ++a)
        for (std::size_t b = a + 1; b < len; ++b) {
          bool consecutive = (b == a + 1) || (a == 0 && b == len - 1);
          CHECK(g.has_edge(c.vertices[a], c.vertices[b]) == consecutive);
        }
      if (i > 0) CHECK(!(cycles[i - 1].members == c.members));
    }
    // Same graph, same list.
    auto again = enumerate_chordless_cycles(g);
    REQUIRE(again.size() == cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i)
      CHECK(again[i].vertices == cycles[i].vertices);
  }
}

TEST_CASE("max packing on named graphs") {
  Graph two_triangles = Graph::cycle(3).disjoint_union(Graph::cycle(3));
  PackingResult r = max_cycle_packing(two_triangles);
  CHECK(r.nu == 2);
  CHECK(r.exact);
  CHECK(validate_packing(two_triangles, r.witness));
  CHECK(r.witness.cycles.size() == 2);

  CHECK(max_cycle_packing(Graph::complete(4)).nu == 1);
  CHECK(max_cycle_packing(petersen()).nu == 2);
  CHECK(max_cycle_packing(Graph::path(6)).nu == 0);

  for (int n = 5; n <= 12; ++n)
    CHECK(max_cycle_packing(Graph::complete_split(n, 3)).nu == 1);
}

TEST_CASE("has_k_disjoint_cycles") {
  CHECK(!has_k_disjoint_cycles(Graph::path(8), 1).found);

  auto r = has_k_disjoint_cycles(Graph::complete_bipartite(4, 4), 2);
  CHECK(r.found);
  CHECK(r.witness.cycles.size() == 2);
  CHECK(validate_packing(Graph::complete_bipartite(4, 4), r.witness));

  CHECK(!has_k_disjoint_cycles(Graph::complete_split(20, 3), 2).found);
}

TEST_CASE("chordless packing equals brute force over all simple cycles") {
  // The acceptance suite covers every class on up to 7 vertices; here the
  // full sweep up to 6 plus a random batch at 7-8.
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : brute_class_representatives(n))
      CHECK(max_cycle_packing(g).nu == brute_max_cycle_packing(g));

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = random_graph(rng, 7 + static_cast<int>(rng() % 2), 0.4);
    CHECK(max_cycle_packing(g).nu == brute_max_cycle_packing(g));
  }
}

TEST_CASE("packing properties on a random corpus") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    Graph g = random_graph(rng, n, 0.5);
    PackingResult full = max_cycle_packing(g);
    CHECK(validate_packing(g, full.witness));
    CHECK(static_cast<int>(full.witness.cycles.size()) == full.nu);

    // Monotone under edge deletion.
    auto edges = edge_list(g);
    if (!edges.empty()) {
      auto [u, v] = edges[rng() % edges.size()];
      CHECK(max_cycle_packing(g.without_edge(u, v)).nu <= full.nu);
    }

    // Additive over disjoint union.
    Graph h = random_graph(rng, 3 + static_cast<int>(rng() % 4), 0.5);
    CHECK(max_cycle_packing(g.disjoint_union(h)).nu ==
          full.nu + max_cycle_packing(h).nu);

    // Decision agrees with the optimum, and the fast path agrees too.
    for (int k = 1; k <= full.nu + 1; ++k) {
      CHECK(has_k_disjoint_cycles(g, k).found == (full.nu >= k));
      CHECK(detail::small_graph_has_k_disjoint(g, k) == (full.nu >= k));
    }
  }
}

TEST_CASE("cycle cap behavior") {
  Graph k9 = Graph::complete(9);  // 9·8·7/6 = 84 triangles
  CHECK(enumerate_chordless_cycles(k9).size() == 84);
  CHECK_THROWS_AS(enumerate_chordless_cycles(k9, 10), CapExceededError);

  // Truncated packing still yields a valid lower-bound witness.
  PackingResult r = max_cycle_packing(k9, 10);
  CHECK(!r.exact);
  CHECK(r.nu >= 1);
  CHECK(validate_packing(k9, r.witness));

  // A packing found within a truncated universe is still certain. The
  // triangles arrive in set-lex order, so {0,1,2} and {3,4,5} both sit
  // within the first 70 of the 84.
  auto dec = has_k_disjoint_cycles(k9, 2, 70);
  CHECK(dec.found);
  CHECK(dec.exact);
  CHECK(validate_packing(k9, dec.witness));

  // Under a tiny cap every enumerated triangle shares vertex 0, so a pair
  // cannot be found and absence cannot be certified either.
  auto miss = has_k_disjoint_cycles(k9, 2, 10);
  CHECK(!miss.found);
  CHECK(!miss.exact);

  CHECK_THROWS_AS(has_k_disjoint_cycles(k9, 0), InvalidParameterError);
  CHECK_THROWS_AS(max_cycle_packing(Graph(65)), UnsupportedSizeError);
}

TEST_CASE("packing at the 64-vertex boundary") {
  Graph g(64);
  for (int i = 0; i < 3; ++i) {
    g.add_edge(58 + i, 58 + (i + 1) % 3);  // triangle on 58..60
    g.add_edge(61 + i, 61 + (i + 1) % 3);  // triangle on 61..63
  }
  PackingResult r = max_cycle_packing(g);
  CHECK(r.nu == 2);
  CHECK(validate_packing(g, r.witness));
  CHECK(has_k_disjoint_cycles(g, 2).found);
  CHECK(!has_k_disjoint_cycles(g, 3).found);
  CHECK(detail::small_graph_has_k_disjoint(g, 2));
  CHECK(!detail::small_graph_has_k_disjoint(g, 3));
}
