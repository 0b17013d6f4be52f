#include <doctest.h>

#include <random>

#include "sel/graph.hpp"
#include "test_helpers.hpp"

using namespace sel;
using namespace sel::testing;

TEST_CASE("complete split graph construction") {
  Graph s93 = Graph::complete_split(9, 3);
  CHECK(s93.edge_count() == 21);  // 3 clique edges + 18 join edges
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 9; ++v) CHECK(s93.has_edge(u, v));
  for (int u = 3; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v) CHECK(!s93.has_edge(u, v));

  Graph star = Graph::complete_split(5, 1);
  CHECK(star.edge_count() == 4);
  CHECK(star.degree(0) == 4);
  for (int v = 1; v < 5; ++v) CHECK(star.degree(v) == 1);

  CHECK_THROWS_AS(Graph::complete_split(5, 0), InvalidParameterError);
  CHECK_THROWS_AS(Graph::complete_split(5, 5), InvalidParameterError);
  CHECK_THROWS_AS(Graph::complete_split(5, 6), InvalidParameterError);
}

TEST_CASE("edge counting within and between") {
  Graph k4 = Graph::complete(4);
  CHECK(k4.edge_count_within(VertexSet::full(4)) == 6);

  Graph s93 = Graph::complete_split(9, 3);
  VertexSet clique(9, {0, 1, 2});
  VertexSet indep = clique.complement();
  CHECK(s93.edge_count_within(clique) == 3);
  CHECK(s93.edge_count_within(indep) == 0);
  CHECK(s93.edge_count_between(clique, indep) == 18);

  // Overlapping arguments double-count internal edges.
  Graph k3 = Graph::complete(3);
  CHECK(k3.edge_count_between(VertexSet::full(3), VertexSet::full(3)) == 6);
}

TEST_CASE("neighborhoods and second neighborhoods") {
  Graph p3 = Graph::path(3);
  CHECK(p3.neighborhood(0) == VertexSet(3, {1}));
  CHECK(p3.second_neighborhood(0) == VertexSet(3, {2}));

  Graph s93 = Graph::complete_split(9, 3);
  CHECK(s93.neighborhood(5).count() == 3);
  CHECK(s93.second_neighborhood(5).count() == 5);

  Graph k5 = Graph::complete(5);
  for (int v = 0; v < 5; ++v) CHECK(k5.second_neighborhood(v).empty());

  // N(v), N2(v), {v} pairwise disjoint on a random corpus.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, 8, 0.4);
    for (int v = 0; v < 8; ++v) {
      VertexSet n1 = g.neighborhood(v);
      VertexSet n2 = g.second_neighborhood(v);
      CHECK(!n1.contains(v));
      CHECK(!n2.contains(v));
      CHECK(!(n1 & n2).count());
    }
  }
}

TEST_CASE("edge identities hold exactly on random triples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, 0.5);
    VertexSet a = random_subset(rng, n);
    VertexSet b = random_subset(rng, n);
    std::int64_t e_ab = g.edge_count_between(a, b);
    std::int64_t rhs = g.edge_count_between(a, b - a) +
                       2 * g.edge_count_within(a & b) +
                       g.edge_count_between(a - b, a & b);
    CHECK(e_ab == rhs);
    CHECK(e_ab <= g.edge_count_within(a | b) + g.edge_count_within(a & b));
    CHECK(e_ab <= static_cast<std::int64_t>(a.count()) * b.count());
  }
}

TEST_CASE("graph invariants and basic ops") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = random_graph(rng, n, 0.4);
    // symmetry and degree sum
    std::int64_t degsum = 0;
    for (int u = 0; u < n; ++u) {
      degsum += g.degree(u);
      for (int v = 0; v < n; ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
      CHECK(!g.has_edge(u, u));
    }
    CHECK(degsum == 2 * g.edge_count());
  }

  Graph g(4);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), InvalidParameterError);
  CHECK_THROWS_AS(g.add_edge(0, 4), InvalidParameterError);
  CHECK(g.with_edge(1, 2).edge_count() == 2);
  CHECK(g.edge_count() == 1);  // with_edge does not mutate

  Graph u = Graph::cycle(3).disjoint_union(Graph::cycle(4));
  CHECK(u.order() == 7);
  CHECK(u.edge_count() == 7);
  CHECK(u.connected_components().size() == 2);
}

TEST_CASE("relabeling preserves adjacency through the permutation") {
  std::mt19937_64 rng(19);
  Graph g = random_graph(rng, 7, 0.5);
  auto perm = random_permutation(rng, 7);
  Graph h = g.relabeled(perm);
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v)
      CHECK(g.has_edge(u, v) ==
            h.has_edge(perm[static_cast<std::size_t>(u)],
                       perm[static_cast<std::size_t>(v)]));
}

TEST_CASE("vertex set algebra") {
  VertexSet a(70, {0, 3, 64, 69});
  VertexSet b(70, {3, 64});
  CHECK(b.is_subset_of(a));
  CHECK((a - b) == VertexSet(70, {0, 69}));
  CHECK((a & b) == b);
  CHECK((a | b) == a);
  CHECK(a.complement().count() == 66);
  CHECK(a.first() == 0);
  CHECK(VertexSet(5).first() == -1);
}
