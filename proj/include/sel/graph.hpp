#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sel/errors.hpp"
#include "sel/vertex_set.hpp"

namespace sel {

// Dense bit-row storage grows as n^2/8 bytes; beyond this it is never what
// you want at desk scale.
inline constexpr int kMaxGraphOrder = 100000;

// Simple undirected graph on vertices 0..n-1. Adjacency is kept as
// bit-packed rows in one flat buffer (one word per row up to n = 64).
// Treat instances as immutable once built; the add/remove mutators are for
// construction and for search loops that own their copy.
class Graph {
 public:
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete_bipartite(int a, int b);
  // Join of a clique on c vertices (0..c-1) with an independent set on the
  // remaining n-c. Requires 1 <= c < n.
  static Graph complete_split(int n, int c);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1ULL;
  }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  int degree(int v) const;

  // N(v) as a fresh set.
  VertexSet neighborhood(int v) const;
  // Vertices at distance exactly 2 from v.
  VertexSet second_neighborhood(int v) const;

  // Edges with both endpoints in A.
  std::int64_t edge_count_within(const VertexSet& a) const;
  // Edges with one endpoint in A and one in B; edges inside A∩B count twice.
  std::int64_t edge_count_between(const VertexSet& a, const VertexSet& b) const;

  // Components sorted by their lowest vertex.
  std::vector<VertexSet> connected_components() const;

  // New graph where old vertex v becomes perm[v].
  Graph relabeled(const std::vector<int>& perm) const;

  Graph disjoint_union(const Graph& other) const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }

  const std::uint64_t* row(int v) const {
    return bits_.data() + static_cast<std::size_t>(v) * wpr_;
  }
  int words_per_row() const { return wpr_; }

 private:
  void check_vertex(int v) const;
  std::uint64_t* mutable_row(int v) {
    return bits_.data() + static_cast<std::size_t>(v) * wpr_;
  }

  int n_;
  int wpr_;
  std::int64_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace sel
