#pragma once

#include <cstdint>
#include <vector>

#include "sel/graph.hpp"

namespace sel {

inline constexpr double kDefaultSpectralTol = 1e-12;
inline constexpr long kPowerIterationCap = 1000000;

struct ComponentSpectrum {
  VertexSet vertices;
  double rho = 0;
  long iterations = 0;
  bool converged = true;
};

struct PerronResult {
  double rho = 0;
  std::vector<double> x;     // unit vector, zero outside the winning component
  double residual = 0;       // ||A x - rho x||_inf on the winning component
  long iterations = 0;
  bool converged = true;
  VertexSet component;       // component realizing rho
  std::vector<ComponentSpectrum> components;
};

// Power iteration on A + I per connected component, all-ones start. The +I
// shift makes every nontrivial component primitive, so bipartite components
// cannot oscillate. Convergence needs both a small Rayleigh step and a small
// residual. Ties between components go to the one with the lowest vertex;
// a graph with no edges reports rho 0 and the uniform vector.
PerronResult spectral_radius(const Graph& g, double tol = kDefaultSpectralTol);

// Spectral radius of the complete split graph S_{n,2k-1}:
// (k-1) + sqrt((k-1)^2 + (2k-1)(n-2k+1)). Requires n > 2k-1 >= 1.
double closed_form_split_rho(std::int64_t n, int k);

// Two-valued Perron profile of S_{n,2k-1} from its equitable partition:
// clique entries a = 1, independent entries b = (2k-1)/rho.
struct SplitSpectrum {
  double rho = 0;
  double a = 1;
  double b = 0;
};

SplitSpectrum split_perron_profile(std::int64_t n, int k);

// Extremal edge count (2k-1)(n-k) for graphs with no k disjoint cycles.
std::int64_t erdos_posa_edge_bound(std::int64_t n, int k);

}  // namespace sel
