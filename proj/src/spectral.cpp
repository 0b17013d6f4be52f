#include "sel/spectral.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace sel {

namespace {

struct IterOutcome {
  double rho = 0;
  double residual = 0;
  long iterations = 0;
  bool converged = true;
  std::vector<double> x;  // indexed by position within the component
};

// One component, at least one edge. Works in the component's index space.
IterOutcome power_iterate(const Graph& g, const std::vector<int>& verts,
                          double tol) {
  const std::size_t m = verts.size();
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < m; ++i) pos[verts[i]] = static_cast<int>(i);

  // Local adjacency as index lists; rows are scanned every iteration.
  std::vector<std::vector<int>> nbr(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t* row = g.row(verts[i]);
    for (int w = 0; w < g.order(); ++w)
      if ((row[static_cast<std::size_t>(w) >> 6] >> (w & 63)) & 1ULL)
        nbr[i].push_back(pos[w]);
  }

  IterOutcome out;
  out.x.assign(m, 1.0 / std::sqrt(static_cast<double>(m)));
  std::vector<double> y(m);
  double lam_prev = 0;
  bool have_prev = false;
  out.converged = false;

  for (long it = 1; it <= kPowerIterationCap; ++it) {
    for (std::size_t i = 0; i < m; ++i) {
      double s = out.x[i];  // the +I shift
      for (int j : nbr[i]) s += out.x[j];
      y[i] = s;
    }
    double lam = 0;
    for (std::size_t i = 0; i < m; ++i) lam += out.x[i] * y[i];
    double resid = 0;
    for (std::size_t i = 0; i < m; ++i)
      resid = std::max(resid, std::abs(y[i] - lam * out.x[i]));
    double norm = 0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < m; ++i) out.x[i] = y[i] / norm;

    out.rho = lam - 1.0;
    out.residual = resid;
    out.iterations = it;
    if (have_prev && std::abs(lam - lam_prev) <= tol &&
        resid <= tol * std::max(1.0, lam - 1.0)) {
      out.converged = true;
      break;
    }
    lam_prev = lam;
    have_prev = true;
  }

  // Report rho and residual of the vector actually returned.
  for (std::size_t i = 0; i < m; ++i) {
    double s = out.x[i];
    for (int j : nbr[i]) s += out.x[j];
    y[i] = s;
  }
  double lam = 0;
  for (std::size_t i = 0; i < m; ++i) lam += out.x[i] * y[i];
  double resid = 0;
  for (std::size_t i = 0; i < m; ++i)
    resid = std::max(resid, std::abs(y[i] - lam * out.x[i]));
  out.rho = lam - 1.0;
  out.residual = resid;
  return out;
}

}  // namespace

PerronResult spectral_radius(const Graph& g, double tol) {
  if (!(tol > 0)) throw InvalidParameterError("tolerance must be positive");

  PerronResult res;
  res.x.assign(g.order(), 0.0);
  res.component = VertexSet(g.order());

  int best = -1;
  std::vector<IterOutcome> outcomes;
  std::vector<std::vector<int>> vert_lists;
  auto comps = g.connected_components();
  for (const VertexSet& comp : comps) {
    std::vector<int> verts = comp.to_vector();
    IterOutcome o;
    if (verts.size() == 1) {
      o.x.assign(1, 1.0);
    } else {
      o = power_iterate(g, verts, tol);
    }
    ComponentSpectrum cs;
    cs.vertices = comp;
    cs.rho = o.rho;
    cs.iterations = o.iterations;
    cs.converged = o.converged;
    res.components.push_back(std::move(cs));
    if (best < 0 || o.rho > outcomes[best].rho + 1e-12) {
      best = static_cast<int>(outcomes.size());
    }
    outcomes.push_back(std::move(o));
    vert_lists.push_back(std::move(verts));
  }

  if (g.edge_count() == 0) {
    // Degenerate eigenspace; the uniform vector keeps reports stable.
    double u = 1.0 / std::sqrt(static_cast<double>(g.order()));
    for (int v = 0; v < g.order(); ++v) res.x[v] = u;
    res.component = VertexSet::full(g.order());
    res.rho = 0;
    res.residual = 0;
    res.iterations = 0;
    res.converged = true;
    return res;
  }

  const IterOutcome& win = outcomes[best];
  const std::vector<int>& verts = vert_lists[best];
  for (std::size_t i = 0; i < verts.size(); ++i) res.x[verts[i]] = win.x[i];
  res.component = res.components[best].vertices;
  res.rho = win.rho;
  res.residual = win.residual;
  res.iterations = win.iterations;
  res.converged = win.converged;
  return res;
}

double closed_form_split_rho(std::int64_t n, int k) {
  if (k < 1) throw InvalidParameterError("k must be >= 1");
  if (n <= 2 * static_cast<std::int64_t>(k) - 1)
    throw InvalidParameterError("need n > 2k-1, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  double km1 = static_cast<double>(k - 1);
  double c = static_cast<double>(2 * k - 1);
  double tail = static_cast<double>(n - 2 * k + 1);
  return km1 + std::sqrt(km1 * km1 + c * tail);
}

SplitSpectrum split_perron_profile(std::int64_t n, int k) {
  SplitSpectrum s;
  s.rho = closed_form_split_rho(n, k);
  s.a = 1.0;
  s.b = static_cast<double>(2 * k - 1) / s.rho;
  return s;
}

std::int64_t erdos_posa_edge_bound(std::int64_t n, int k) {
  if (k < 1) throw InvalidParameterError("k must be >= 1");
  if (n <= 2 * static_cast<std::int64_t>(k) - 1)
    throw InvalidParameterError("need n > 2k-1");
  return (2 * static_cast<std::int64_t>(k) - 1) * (n - k);
}

}  // namespace sel
