#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sel/graph.hpp"
#include "sel/spectral.hpp"

namespace sel {

// lambda = 1 / (120 k^2), the cutoff defining R and R'.
double threshold_lambda(int k);

// Smallest order 16(2k-1)/lambda^2 at which the structural bounds below are
// proven. Integral for every k.
std::int64_t asymptotic_threshold_n(int k);

// Nested sets of vertices with large Perron entries, relative to the maximum
// entry u*. R and R' use strict >, R'' uses >=; R''' collects the vertices
// adjacent to all of R''; R'''' is everything else.
struct ThresholdSets {
  int k = 0;
  double lambda = 0;
  int u_star = 0;
  std::vector<double> ratios;  // x_v / x_{u*}
  VertexSet r, r_prime, r_dprime, r_tprime, r_qprime;
};

// `slack` shifts every cutoff additively; the default 0 keeps the defining
// inequalities exact on the computed doubles.
ThresholdSets compute_thresholds(const Graph& g, const PerronResult& p, int k,
                                 double slack = 0.0);

enum class CheckStatus { pass, fail, not_applicable, informational };

const char* to_string(CheckStatus s);

struct BoundCheck {
  std::string id;
  std::string claim;
  bool hypothesis_met = false;
  double claimed = 0;
  double measured = 0;
  CheckStatus status = CheckStatus::not_applicable;
};

struct LemmaReport {
  std::int64_t n = 0;
  int k = 0;
  double lambda = 0;
  bool hypothesis_met = false;  // k >= 2 and n >= asymptotic_threshold_n(k)
  std::vector<BoundCheck> checks;
};

// Evaluates each proven size/degree bound on the measured sets. Below the
// asymptotic threshold the entries are informational (not-applicable), never
// failures.
LemmaReport verify_lemma_bounds(const ThresholdSets& t, const Graph& g, int k);

// Analytic threshold structure of S_{n,2k-1}, from the two-valued Perron
// profile; no adjacency is materialized, so n may be astronomically large.
struct SplitClassInfo {
  std::uint64_t size = 0;
  bool clique = false;
  bool independent = false;
};

struct SplitThresholdStructure {
  std::int64_t n = 0;
  int k = 0;
  double lambda = 0;
  double rho = 0;
  double ratio_indep = 0;  // clique-class ratio is exactly 1
  SplitClassInfo r, r_prime, r_dprime, r_tprime, r_qprime;
};

SplitThresholdStructure split_threshold_structure(std::int64_t n, int k);

LemmaReport verify_lemma_bounds(const SplitThresholdStructure& s);

// Both sides of |S_1 ∩ ... ∩ S_m| >= sum |S_i| - (m-1)|S_1 ∪ ... ∪ S_m|.
struct IntersectionBound {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

IntersectionBound set_intersection_bound(const std::vector<VertexSet>& sets);

// Looks for 2k vertices of R'' sharing at least 2k common neighbors — a
// K_{2k,2k}, hence k vertex-disjoint quadrilaterals.
struct BicliqueWitness {
  bool found = false;
  std::vector<int> left;
  std::vector<int> right;
};

BicliqueWitness check_common_neighborhood_kkk(const ThresholdSets& t,
                                              const Graph& g, int k);

}  // namespace sel
