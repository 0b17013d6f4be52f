#include "sel/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <numeric>
#include <unordered_set>
#include <utility>
#include <vector>

namespace sel {

namespace {

struct PackedAdj {
  int n;
  std::array<std::uint32_t, kCanonicalCap> row;  // row[v] bit u = adjacency
};

PackedAdj pack(const Graph& g) {
  if (g.order() > kCanonicalCap)
    throw UnsupportedSizeError("canonical form supports order <= " +
                               std::to_string(kCanonicalCap));
  PackedAdj a{g.order(), {}};
  for (int v = 0; v < a.n; ++v) {
    std::uint32_t bits = 0;
    for (int u = 0; u < a.n; ++u)
      if (u != v && g.has_edge(u, v)) bits |= 1u << u;
    a.row[v] = bits;
  }
  return a;
}

// Placement state: which vertices are used, and for every unused vertex the
// column it would emit next (its adjacency to the placed sequence, first
// placed vertex as the most significant bit).
struct State {
  std::uint32_t mask = 0;
  std::array<std::uint16_t, kCanonicalCap> col{};
};

// Exact fingerprint: 10-bit mask plus ten 9-bit columns (zeroed for used
// vertices) — no hashing ambiguity.
std::pair<std::uint64_t, std::uint64_t> fingerprint(const State& s, int n) {
  std::uint64_t lo = s.mask;
  std::uint64_t hi = 0;
  for (int v = 0; v < n && v < 6; ++v)
    lo |= static_cast<std::uint64_t>(s.mask & (1u << v) ? 0 : s.col[v])
          << (10 + 9 * v);
  for (int v = 6; v < n; ++v)
    hi |= static_cast<std::uint64_t>(s.mask & (1u << v) ? 0 : s.col[v])
          << (9 * (v - 6));
  return {lo, hi};
}

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p)
      const {
    return p.first * 0x9e3779b97f4a7c15ULL ^ (p.second + 0x7f4a7c15ULL);
  }
};

std::uint64_t bits_of_permutation(const PackedAdj& a,
                                  const std::vector<int>& order) {
  std::uint64_t bits = 0;
  int idx = 0;
  for (int p = 1; p < a.n; ++p)
    for (int q = 0; q < p; ++q, ++idx)
      if (a.row[order[p]] & (1u << order[q]))
        bits |= 1ULL << idx;
  return bits;
}

std::uint64_t brute_force_min_bits(const PackedAdj& a) {
  std::vector<int> order(a.n);
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    best = std::min(best, bits_of_permutation(a, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

constexpr std::size_t kStateCap = 1u << 17;

}  // namespace

CanonicalKey canonical_form(const Graph& g) {
  PackedAdj a = pack(g);
  const int n = a.n;

  std::vector<State> states(1);
  std::vector<State> next;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> seen;
  std::uint64_t bits = 0;
  int idx = 0;

  for (int p = 0; p < n; ++p) {
    std::uint16_t m = 0xffff;
    for (const State& s : states)
      for (int v = 0; v < n; ++v)
        if (!(s.mask & (1u << v))) m = std::min(m, s.col[v]);

    // Append the winning column, bit (q,p) at index p(p-1)/2 + q.
    for (int q = 0; q < p; ++q, ++idx)
      if (m & (1u << (p - 1 - q))) bits |= 1ULL << idx;

    next.clear();
    seen.clear();
    for (const State& s : states) {
      for (int v = 0; v < n; ++v) {
        if ((s.mask & (1u << v)) || s.col[v] != m) continue;
        State t;
        t.mask = s.mask | (1u << v);
        for (int u = 0; u < n; ++u)
          t.col[u] = static_cast<std::uint16_t>(
              (s.col[u] << 1) | ((a.row[u] >> v) & 1u));
        if (seen.insert(fingerprint(t, n)).second) next.push_back(t);
      }
    }
    states.swap(next);
    if (states.size() > kStateCap)
      return CanonicalKey{n, brute_force_min_bits(a)};
  }
  return CanonicalKey{n, bits};
}

Graph graph_from_key(const CanonicalKey& key) {
  Graph g(key.n);
  int idx = 0;
  for (int p = 1; p < key.n; ++p)
    for (int q = 0; q < p; ++q, ++idx)
      if (key.bits & (1ULL << idx)) g.add_edge(q, p);
  return g;
}

std::string key_to_hex(const CanonicalKey& key) {
  int nbits = key.n * (key.n - 1) / 2;
  int width = (nbits + 3) / 4;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02d:%0*llx", key.n, width,
                static_cast<unsigned long long>(key.bits));
  return buf;
}

bool is_max_canonical(const Graph& g) {
  PackedAdj a = pack(g);
  const int n = a.n;

  // Columns of the identity labeling.
  std::array<std::uint16_t, kCanonicalCap> own{};
  for (int p = 0; p < n; ++p) {
    std::uint16_t c = 0;
    for (int q = 0; q < p; ++q)
      c = static_cast<std::uint16_t>((c << 1) | ((a.row[p] >> q) & 1u));
    own[p] = c;
  }

  thread_local std::unordered_set<std::pair<std::uint64_t, std::uint64_t>,
                                  PairHash>
      visited;
  visited.clear();

  // DFS over placements whose emitted columns tie the identity string; any
  // strictly larger column proves a better relabeling exists.
  std::vector<std::pair<State, int>> stack;
  stack.push_back({State{}, 0});
  while (!stack.empty()) {
    auto [s, p] = stack.back();
    stack.pop_back();
    if (p == n) continue;  // an automorphism, not a bigger string
    for (int v = 0; v < n; ++v) {
      if (s.mask & (1u << v)) continue;
      if (s.col[v] > own[p]) return false;
      if (s.col[v] < own[p]) continue;
      State t;
      t.mask = s.mask | (1u << v);
      for (int u = 0; u < n; ++u)
        t.col[u] = static_cast<std::uint16_t>(
            (s.col[u] << 1) | ((a.row[u] >> v) & 1u));
      if (visited.insert(fingerprint(t, n)).second)
        stack.push_back({t, p + 1});
    }
  }
  return true;
}

}  // namespace sel
