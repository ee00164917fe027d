#include "gsp/poincare.hpp"

#include <algorithm>
#include <cmath>

#include "gsp/error.hpp"
#include "gsp/rng.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

std::vector<int> neighborhood(const Graph& g, const std::vector<int>& s) {
  std::vector<bool> in_s(g.n, false);
  for (int u : s) {
    if (u < 0 || u >= g.n) throw error(errc::invalid_params, "neighborhood: node out of range");
    in_s[u] = true;
  }
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(g.n);
  for (int u : s) mass += g.adjacency.col(u);
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (!in_s[v] && mass[v] > 0.0) out.push_back(v);
  return out;
}

GammaGraph gamma_graph(const Graph& g, const std::vector<int>& s) {
  std::vector<int> ns = neighborhood(g, s);
  if (ns.empty())
    throw error(errc::disconnected_set, "gamma_graph: N(S) is empty");
  const int a = int(s.size());
  const int b = int(ns.size());
  GammaGraph gg;
  gg.s_size = a;
  gg.ns_size = b;
  gg.original.reserve(2 * a + b);
  std::vector<int> pos(g.n, -1);  // position within S u N(S)
  for (int i = 0; i < a; ++i) {
    pos[s[i]] = i;
    gg.original.push_back(s[i]);
  }
  for (int i = 0; i < b; ++i) {
    pos[ns[i]] = a + i;
    gg.original.push_back(ns[i]);
  }
  for (int i = 0; i < a; ++i) gg.original.push_back(s[i]);  // mirror S'

  std::vector<Edge> edges;
  auto add_within = [&](int u, int v, double w, int shift_u, int shift_v) {
    edges.push_back({pos[u] + shift_u, pos[v] + shift_v, w});
  };
  for (int col = 0; col < g.adjacency.outerSize(); ++col) {
    if (pos[col] < 0) continue;
    for (Eigen::SparseMatrix<double>::InnerIterator it(g.adjacency, col); it; ++it) {
      int row = int(it.row());
      if (pos[row] < 0 || row > col) continue;  // each undirected edge once
      bool row_in_s = pos[row] < a, col_in_s = pos[col] < a;
      // Original copy within S u N(S).
      add_within(row, col, it.value(), 0, 0);
      // Mirrored copy: S nodes shift into S', N(S) maps to itself. Edges
      // fully inside N(S) exist only once.
      if (row_in_s || col_in_s)
        add_within(row, col, it.value(), row_in_s ? a + b : 0, col_in_s ? a + b : 0);
    }
  }
  gg.graph = build_graph(edges, 2 * a + b);
  return gg;
}

PoincareCertificate poincare_constant(const Graph& g, const std::vector<int>& s,
                                      double zero_threshold) {
  if (s.empty() || int(s.size()) >= g.n)
    throw error(errc::invalid_params, "poincare_constant: S must be a proper nonempty subset");
  GammaGraph gg = gamma_graph(g, s);
  Spectrum spec = laplacian_spectrum(gg.graph);
  double lambda1 = -1.0;
  for (int i = 0; i < spec.k(); ++i)
    if (spec.eigenvalues[i] > zero_threshold) {
      lambda1 = spec.eigenvalues[i];
      break;
    }
  if (lambda1 <= 0.0)
    throw error(errc::degenerate_spectrum, "poincare_constant: no eigenvalue above threshold");
  PoincareCertificate cert;
  cert.s = s;
  cert.ns = neighborhood(g, s);
  cert.lambda1 = lambda1;
  cert.lambda_big = 1.0 / lambda1;
  cert.bandwidth = lambda1;
  return cert;
}

PoincareReport verify_poincare(const Graph& g, const std::vector<int>& s, int trials,
                               std::uint64_t seed) {
  PoincareCertificate cert = poincare_constant(g, s);
  Eigen::MatrixXd lap = normalized_laplacian_dense(g);
  PoincareReport rep;
  rep.trials = trials;
  double max_ratio = 0.0;
  bool violated = false;
#pragma omp parallel for schedule(static) reduction(max : max_ratio) reduction(|| : violated)
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::split(seed, std::uint64_t(t));
    Eigen::VectorXd x = Eigen::VectorXd::Zero(g.n);
    for (int u : s) x[u] = rng.next_normal();
    double xn = x.norm();
    double lxn = (lap * x).norm();
    if (xn > cert.lambda_big * lxn + 1e-9) violated = true;
    if (lxn > 0.0) max_ratio = std::max(max_ratio, xn / lxn);
  }
  if (violated)
    throw error(errc::theorem_violation, "verify_poincare: inequality violated");
  rep.max_ratio = max_ratio;
  rep.passed = rep.max_ratio <= cert.lambda_big + 1e-9;
  return rep;
}

double poincare_ratio(const Graph& g, const PoincareCertificate& cert, const Signal& x) {
  if (x.size() != g.n)
    throw error(errc::dimension_mismatch, "poincare_ratio: signal length mismatch");
  std::vector<bool> in_s(g.n, false);
  for (int u : cert.s) in_s[u] = true;
  for (int v = 0; v < g.n; ++v)
    if (!in_s[v] && x[v] != 0.0)
      throw error(errc::invalid_support, "poincare_ratio: signal has mass outside S");
  double xn = x.norm();
  double lxn = (normalized_laplacian(g) * x).norm();
  if (xn > cert.lambda_big * lxn + 1e-9)
    throw error(errc::theorem_violation, "poincare_ratio: inequality violated");
  return lxn > 0.0 ? xn / lxn : 0.0;
}

}  // namespace gsp
