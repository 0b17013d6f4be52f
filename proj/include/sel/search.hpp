#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sel/canonical.hpp"
#include "sel/cycles.hpp"
#include "sel/graph.hpp"

namespace sel {

// Exhaustive runs above this order take hours; raising it needs an explicit
// override (CLI --cap / SEL_CAP_OVERRIDE), and the canonical cap is a hard
// ceiling.
inline constexpr int kDefaultEnumerationCap = 9;

enum class Objective { edges, spectral };
enum class SearchMode { exhaustive, local };

struct SearchSpec {
  int n = 0;
  int k = 1;
  Objective objective = Objective::edges;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;
  int cap = kDefaultEnumerationCap;
  int jobs = 1;
  std::int64_t budget = 10000;
};

struct EnumStats {
  std::uint64_t classes_visited = 0;
  std::uint64_t candidates = 0;
  std::uint64_t infeasible_pruned = 0;
  std::uint64_t noncanonical_rejected = 0;

  EnumStats& operator+=(const EnumStats& o) {
    classes_visited += o.classes_visited;
    candidates += o.candidates;
    infeasible_pruned += o.infeasible_pruned;
    noncanonical_rejected += o.noncanonical_rejected;
    return *this;
  }
};

// Visits every isomorphism class of n-vertex graphs containing no k
// vertex-disjoint cycles exactly once, via orderly edge addition: edges are
// added in increasing column index, a child survives only if its adjacency
// string is relabeling-maximal, and infeasible children are pruned (the
// property is closed under edge deletion). The visitor receives the class
// representative.
EnumStats enumerate_feasible(int n, int k,
                             const std::function<void(const Graph&)>& visit,
                             int cap = kDefaultEnumerationCap);

struct SearchWitness {
  CanonicalKey key;
  std::string graph6;
  double rho = 0;  // meaningful for spectral objectives
};

struct ExtremalRecord {
  Objective objective = Objective::edges;
  double optimum = 0;
  std::vector<SearchWitness> witnesses;  // sorted by key
  std::uint64_t graphs_examined = 0;
  bool exact = false;
  std::uint64_t rho_evaluations = 0;
  EnumStats stats;
};

// Maximum edge count over feasible classes, with every maximizer reported.
ExtremalRecord edge_maximizer(int n, int k, int cap = kDefaultEnumerationCap,
                              int jobs = 1);

// Maximum spectral radius over feasible classes. Only edge-maximal feasible
// graphs are evaluated: any other feasible graph has a feasible supergraph
// with no smaller radius. Witnesses within 1e-9 relative of the optimum are
// all reported.
ExtremalRecord spectral_maximizer(int n, int k,
                                  int cap = kDefaultEnumerationCap,
                                  int jobs = 1);

inline constexpr double kSpectralTieTolerance = 1e-9;

// Removes the edge v--dropped_neighbor and joins v to every hub vertex it
// was not already adjacent to.
Graph rewire_to_hub(const Graph& g, int v, int dropped_neighbor,
                    const VertexSet& hub);

// First-improvement hill climb over single-edge additions and hub rewires
// targeting the current R''; only feasibility-preserving moves that raise
// the spectral radius are taken. Seeded perturbation restarts run whenever
// the climb stalls with budget remaining. Never exact.
ExtremalRecord local_search(const Graph& g0, int k, std::int64_t budget,
                            std::uint64_t seed = 0);

// Dispatch on objective and mode. Local mode climbs from the path graph on
// spec.n vertices.
ExtremalRecord run_search(const SearchSpec& spec);

}  // namespace sel
