#include "sel/graph.hpp"

#include <bit>
#include <string>

namespace sel {

Graph::Graph(int n) : n_(n), wpr_((n + 63) / 64) {
  if (n < 1) throw InvalidParameterError("graph order must be >= 1");
  if (n > kMaxGraphOrder)
    throw UnsupportedSizeError(
        "graph order " + std::to_string(n) + " exceeds dense-row cap " +
        std::to_string(kMaxGraphOrder));
  bits_.assign(static_cast<std::size_t>(n_) * wpr_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InvalidParameterError("vertex " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n_) +
                                ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidParameterError("self-loops are not allowed");
  if (has_edge(u, v)) return;
  mutable_row(u)[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63);
  mutable_row(v)[static_cast<std::size_t>(u) >> 6] |= 1ULL << (u & 63);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v)) return;
  mutable_row(u)[static_cast<std::size_t>(v) >> 6] &= ~(1ULL << (v & 63));
  mutable_row(v)[static_cast<std::size_t>(u) >> 6] &= ~(1ULL << (u & 63));
  --m_;
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  Graph g = *this;
  g.remove_edge(u, v);
  return g;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int i = 0; i < wpr_; ++i) d += std::popcount(r[i]);
  return d;
}

VertexSet Graph::neighborhood(int v) const {
  check_vertex(v);
  VertexSet s(n_);
  const std::uint64_t* r = row(v);
  for (int w = 0; w < n_; ++w)
    if ((r[static_cast<std::size_t>(w) >> 6] >> (w & 63)) & 1ULL) s.insert(w);
  return s;
}

VertexSet Graph::second_neighborhood(int v) const {
  VertexSet nv = neighborhood(v);
  VertexSet reach(n_);
  nv.for_each([&](int u) {
    const std::uint64_t* r = row(u);
    for (int w = 0; w < n_; ++w)
      if ((r[static_cast<std::size_t>(w) >> 6] >> (w & 63)) & 1ULL)
        reach.insert(w);
  });
  VertexSet out = reach - nv;
  out.erase(v);
  return out;
}

std::int64_t Graph::edge_count_within(const VertexSet& a) const {
  // Each internal edge contributes to two rows.
  std::int64_t twice = 0;
  a.for_each([&](int v) {
    const std::uint64_t* r = row(v);
    for (int i = 0; i < wpr_; ++i)
      twice += std::popcount(r[i] & a.words()[i]);
  });
  return twice / 2;
}

std::int64_t Graph::edge_count_between(const VertexSet& a,
                                       const VertexSet& b) const {
  // Sum over v in A of |N(v) ∩ B| counts A∩B-internal edges twice, which is
  // exactly the overlap convention this op promises.
  std::int64_t total = 0;
  a.for_each([&](int v) {
    const std::uint64_t* r = row(v);
    for (int i = 0; i < wpr_; ++i)
      total += std::popcount(r[i] & b.words()[i]);
  });
  return total;
}

std::vector<VertexSet> Graph::connected_components() const {
  std::vector<VertexSet> comps;
  VertexSet seen(n_);
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(n_);
    stack.push_back(s);
    seen.insert(s);
    comp.insert(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      const std::uint64_t* r = row(v);
      for (int w = 0; w < n_; ++w) {
        if (((r[static_cast<std::size_t>(w) >> 6] >> (w & 63)) & 1ULL) &&
            !seen.contains(w)) {
          seen.insert(w);
          comp.insert(w);
          stack.push_back(w);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw InvalidParameterError("permutation size must equal graph order");
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) g.add_edge(perm[u], perm[v]);
  return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph g(n_ + other.n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) g.add_edge(u, v);
  for (int u = 0; u < other.n_; ++u)
    for (int v = u + 1; v < other.n_; ++v)
      if (other.has_edge(u, v)) g.add_edge(n_ + u, n_ + v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InvalidParameterError("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph Graph::complete_split(int n, int c) {
  if (c < 1 || c >= n)
    throw InvalidParameterError("complete split graph requires 1 <= c < n");
  Graph g(n);
  for (int u = 0; u < c; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace sel
