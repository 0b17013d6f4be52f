#pragma once

#include <cstdint>
#include <vector>

#include "sel/graph.hpp"

namespace sel {

inline constexpr std::int64_t kDefaultCycleCap = 1000000;
// The packing engine keys its memo on a single adjacency word.
inline constexpr int kMaxPackingOrder = 64;

struct ChordlessCycle {
  std::vector<int> vertices;  // cyclic order: min vertex first, second < last
  VertexSet members;
};

// Every induced cycle, each reported once, ordered lexicographically by
// sorted vertex set. Throws CapExceededError past `cap` cycles.
std::vector<ChordlessCycle> enumerate_chordless_cycles(
    const Graph& g, std::int64_t cap = kDefaultCycleCap);

struct CyclePacking {
  std::vector<std::vector<int>> cycles;  // vertex-disjoint, cyclic order each
};

struct PackingResult {
  int nu = 0;           // maximum number of vertex-disjoint cycles found
  CyclePacking witness;
  bool exact = true;    // false when the cycle cap truncated the search
};

// Exact maximum vertex-disjoint cycle packing. Any cycle's vertex set
// contains a chordless cycle, so packing over chordless cycles only is
// lossless; the search is branch-and-bound with a memo on the remaining
// vertex set. If the chordless enumeration overflows the cap, the result is
// a lower bound flagged exact = false.
PackingResult max_cycle_packing(const Graph& g,
                                std::int64_t cycle_cap = kDefaultCycleCap);

struct DisjointCyclesResult {
  bool found = false;
  bool exact = true;    // false: cap truncated and nothing was found
  CyclePacking witness; // size k when found
};

// Decides nu(g) >= k, early-exiting as soon as k disjoint cycles appear.
DisjointCyclesResult has_k_disjoint_cycles(
    const Graph& g, int k, std::int64_t cycle_cap = kDefaultCycleCap);

// Consecutive adjacency, closing edges, pairwise disjointness.
bool validate_packing(const Graph& g, const CyclePacking& p);

namespace detail {

// Allocation-light decision for hot enumeration loops; equivalent to
// has_k_disjoint_cycles(g, k).found for graphs small enough that the
// chordless list cannot overflow.
bool small_graph_has_k_disjoint(const Graph& g, int k);

}  // namespace detail

}  // namespace sel
