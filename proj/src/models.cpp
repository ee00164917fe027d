#include "gsp/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gsp/error.hpp"
#include "gsp/rng.hpp"

namespace gsp {

int MixtureModel::component(double w) const {
  for (int i = 0; i < K; ++i)
    if (w >= supports[i].first && w <= supports[i].second) return i;
  return -1;
}

void MixtureModel::validate() const {
  if (K < 1 || int(weights.size()) != K || int(supports.size()) != K ||
      kernel.rows() != K || kernel.cols() != K)
    throw error(errc::invalid_params, "MixtureModel: inconsistent sizes");
  double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12)
    throw error(errc::invalid_params, "MixtureModel: weights must sum to 1");
  for (double w : weights)
    if (w < 0.0) throw error(errc::invalid_params, "MixtureModel: negative weight");
  for (int i = 0; i < K; ++i) {
    if (supports[i].first >= supports[i].second)
      throw error(errc::invalid_support, "MixtureModel: empty support interval");
    if (i > 0 && supports[i].first < supports[i - 1].second)
      throw error(errc::invalid_support, "MixtureModel: supports must be disjoint ascending");
  }
  if ((kernel - kernel.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw error(errc::not_symmetric, "MixtureModel: kernel must be symmetric");
  if (kernel.minCoeff() < 0.0 || kernel.maxCoeff() > 1.0)
    throw error(errc::invalid_params, "MixtureModel: kernel entries must lie in [0,1]");
}

double StepFunction::operator()(double x) const {
  if (breaks.empty() || x < breaks.front() || x > breaks.back()) return 0.0;
  auto it = std::upper_bound(breaks.begin(), breaks.end(), x);
  int idx = int(it - breaks.begin()) - 1;
  return values[std::clamp<int>(idx, 0, int(values.size()) - 1)];
}

StepGraphon sbm_graphon(const Eigen::MatrixXd& blocks, const std::vector<double>& sizes) {
  const int k = int(blocks.rows());
  if (blocks.cols() != k || int(sizes.size()) != k)
    throw error(errc::invalid_params, "sbm_graphon: inconsistent sizes");
  if ((blocks - blocks.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw error(errc::not_symmetric, "sbm_graphon: block matrix must be symmetric");
  double total = std::accumulate(sizes.begin(), sizes.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-9)
    throw error(errc::invalid_partition, "sbm_graphon: block measures must sum to 1");
  StepGraphon w;
  w.boundaries.resize(k + 1);
  w.boundaries[0] = 0.0;
  for (int i = 0; i < k; ++i) {
    if (sizes[i] <= 0.0)
      throw error(errc::invalid_partition, "sbm_graphon: block measures must be positive");
    w.boundaries[i + 1] = w.boundaries[i] + sizes[i];
  }
  w.boundaries[k] = 1.0;
  w.block = blocks;
  return w;
}

LatentGraph sample_graph(const StepGraphon& w, int n, std::uint64_t seed, bool sort) {
  if (n < 1) throw error(errc::invalid_params, "sample_graph: need n >= 1");
  Rng rng(seed);
  std::vector<double> latents(n);
  for (double& u : latents) u = rng.next_double();
  if (sort) std::sort(latents.begin(), latents.end());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double prob = w(latents[i], latents[j]);
      if (prob > 0.0 && rng.next_double() < prob) edges.push_back({i, j, 1.0});
    }
  LatentGraph out;
  out.graph = build_graph(edges, n);
  out.latents = std::move(latents);
  out.components.resize(n);
  for (int i = 0; i < n; ++i) out.components[i] = w.cell(out.latents[i]);
  return out;
}

Graph noiseless_blockmodel(const Eigen::MatrixXd& blocks, const std::vector<int>& sizes) {
  const int k = int(blocks.rows());
  if (blocks.cols() != k || int(sizes.size()) != k)
    throw error(errc::invalid_params, "noiseless_blockmodel: inconsistent sizes");
  int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<int> label(n);
  int at = 0;
  for (int b = 0; b < k; ++b)
    for (int c = 0; c < sizes[b]; ++c) label[at++] = b;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double w = blocks(label[u], label[v]);
      if (w > 0.0) edges.push_back({u, v, w});
    }
  return build_graph(edges, n);
}

StepGraphon mixture_to_graphon(const MixtureModel& mm) {
  mm.validate();
  for (double w : mm.weights)
    if (w <= 0.0)
      throw error(errc::degenerate_component, "mixture_to_graphon: zero-weight component");
  StepGraphon w;
  w.boundaries.resize(mm.K + 1);
  w.boundaries[0] = 0.0;
  for (int i = 0; i < mm.K; ++i) w.boundaries[i + 1] = w.boundaries[i] + mm.weights[i];
  w.boundaries[mm.K] = 1.0;
  w.block = mm.kernel;
  return w;
}

DifficultyReport difficulty(const MixtureModel& mm, int grid) {
  mm.validate();
  if (mm.K < 2) throw error(errc::needs_two_components, "difficulty: need K >= 2");
  if (grid < 2) throw error(errc::invalid_params, "difficulty: grid too small");
  const int k = mm.K;
  DifficultyReport rep;

  // Similarity index (as defined, the value depends only on the first
  // component of the ordered pair).
  rep.s_max = 0.0;
  for (int l = 0; l < k; ++l) {
    double num = mm.kernel(l, l);
    double den = 0.0;
    for (int m = 0; m < k; ++m) den += mm.weights[m] * mm.kernel(m, l);
    rep.s_max = std::max(rep.s_max, den > 0.0 ? num / den : 0.0);
  }

  // Coupling parameter; all integrands are constant on the component blocks.
  rep.coupling = 0.0;
  for (int m = 0; m < k; ++m) {
    double kmm = mm.kernel(m, m);
    double qm2 = kmm;                 // q_m^2 on component m
    double q2 = 0.0;                  // q^2 on component m
    for (int j = 0; j < k; ++j) q2 += mm.weights[j] * mm.kernel(j, m);
    double a = qm2 > 0.0 ? kmm / qm2 : 0.0;
    double b = q2 > 0.0 ? mm.weights[m] * kmm / q2 : 0.0;
    rep.coupling = std::max(rep.coupling, (a - b) * (a - b));
  }

  // Indivisibility: brute force over threshold subsets of a grid split of
  // each support (exact for block kernels, which are constant there).
  rep.gamma_min = std::numeric_limits<double>::infinity();
  for (int m = 0; m < k; ++m) {
    double kmm = mm.kernel(m, m);
    double p_omega = kmm;  // integral of k dP_m dP_m
    double gamma = std::numeric_limits<double>::infinity();
    for (int t = 1; t < grid; ++t) {
      double qs = double(t) / grid, qc = 1.0 - qs;
      double cross = kmm * qs * qc;
      double ps = kmm * qs, pc = kmm * qc;
      double ratio = (ps > 0.0 && pc > 0.0) ? p_omega * cross / (ps * pc) : 0.0;
      gamma = std::min(gamma, ratio);
    }
    rep.gamma_min = std::min(rep.gamma_min, gamma);
  }

  rep.b_max = 0.0;
  for (int m = 0; m < k; ++m) {
    double kmm = mm.kernel(m, m);
    if (kmm <= 0.0) continue;
    for (int c = 0; c < k; ++c) rep.b_max = std::max(rep.b_max, mm.kernel(c, m) / kmm);
  }

  double wmin = *std::min_element(mm.weights.begin(), mm.weights.end());
  double denom = wmin * rep.gamma_min * rep.gamma_min;
  rep.phi = denom > 0.0 ? std::sqrt(k * (rep.s_max + rep.coupling)) / denom
                        : std::numeric_limits<double>::infinity();
  return rep;
}

namespace {

double overlap_len(double a1, double a2, double b1, double b2) {
  return std::max(0.0, std::min(a2, b2) - std::max(a1, b1));
}

// Lebesgue integral of p_i over a union of intervals on [0,1], where p_i is
// constant kernel(i, j) on the pushed-forward block j.
double kernelized_mass(const MixtureModel& mm, const std::vector<double>& cum, int i,
                       const std::vector<std::pair<double, double>>& set) {
  double total = 0.0;
  for (const auto& [lo, hi] : set)
    for (int j = 0; j < mm.K; ++j)
      total += mm.kernel(i, j) * overlap_len(lo, hi, cum[j], cum[j + 1]);
  return total;
}

}  // namespace

std::pair<bool, bool> check_component_uniqueness(
    const MixtureModel& mm, const std::vector<std::vector<std::pair<double, double>>>& a_sets,
    double eps) {
  mm.validate();
  if (mm.K < 2)
    throw error(errc::needs_two_components, "check_component_uniqueness: need K >= 2");
  if (int(a_sets.size()) != mm.K)
    throw error(errc::invalid_params, "check_component_uniqueness: need K sets");
  for (size_t a = 0; a < a_sets.size(); ++a)
    for (size_t b = a + 1; b < a_sets.size(); ++b)
      for (const auto& [l1, h1] : a_sets[a])
        for (const auto& [l2, h2] : a_sets[b])
          if (overlap_len(l1, h1, l2, h2) > 0.0)
            throw error(errc::not_disjoint, "check_component_uniqueness: A sets overlap");

  std::vector<double> cum(mm.K + 1, 0.0);
  for (int i = 0; i < mm.K; ++i) cum[i + 1] = cum[i] + mm.weights[i];
  cum[mm.K] = 1.0;

  Eigen::MatrixXd mass(mm.K, mm.K);  // mass(i, j) = p_i(A_j)
  for (int i = 0; i < mm.K; ++i)
    for (int j = 0; j < mm.K; ++j) mass(i, j) = kernelized_mass(mm, cum, i, a_sets[j]);

  const double k2e2 = double(mm.K) * mm.K * eps * eps;
  const double km1sq = double(mm.K - 1) * (mm.K - 1);
  bool cond1 = true, cond2 = true;
  for (int i = 0; i < mm.K; ++i) {
    double lhs = mass(i, i) - k2e2;
    double off_row = 0.0;
    for (int j = 0; j < mm.K; ++j)
      if (j != i) off_row += mass(i, j);
    if (!(lhs > off_row / km1sq)) cond1 = false;
    double off_col = 0.0;
    for (int j = 0; j < mm.K; ++j)
      if (j != i) off_col += mass(j, i);
    bool ok2 = off_col > 0.0 ? (lhs / off_col > 1.0 / km1sq) : (lhs > 0.0);
    if (!ok2) cond2 = false;
  }
  return {cond1, cond2};
}

StepFunction sqrt_kernelized_density(const MixtureModel& mm, int i) {
  mm.validate();
  if (i < 0 || i >= mm.K)
    throw error(errc::invalid_params, "sqrt_kernelized_density: component out of range");
  StepFunction f;
  double cursor = mm.supports.front().first;
  f.breaks.push_back(cursor);
  for (int c = 0; c < mm.K; ++c) {
    const auto& [lo, hi] = mm.supports[c];
    if (lo > cursor) {  // gap between supports: density 0 there
      f.breaks.push_back(lo);
      f.values.push_back(0.0);
    }
    f.breaks.push_back(hi);
    f.values.push_back(std::sqrt(mm.kernel(i, c)));
    cursor = hi;
  }
  return f;
}

StepSpectrum step_graphon_adjacency_spectrum(const StepGraphon& w) {
  const int q = w.q();
  StepSpectrum out;
  out.measures.resize(q);
  for (int i = 0; i < q; ++i) out.measures[i] = w.boundaries[i + 1] - w.boundaries[i];
  Eigen::VectorXd deg(q);
  for (int i = 0; i < q; ++i) {
    deg[i] = 0.0;
    for (int j = 0; j < q; ++j) deg[i] += w.block(i, j) * out.measures[j];
  }
  Eigen::MatrixXd sym(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      double norm = (deg[i] > 0.0 && deg[j] > 0.0) ? w.block(i, j) / std::sqrt(deg[i] * deg[j])
                                                   : 0.0;
      sym(i, j) = std::sqrt(out.measures[i]) * norm * std::sqrt(out.measures[j]);
    }
  sym = 0.5 * (sym + sym.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenfunctions.resize(q, q);
  for (int c = 0; c < q; ++c) {
    Eigen::VectorXd u = solver.eigenvectors().col(q - 1 - c);
    for (int i = 0; i < q; ++i)
      out.eigenfunctions(i, c) = out.measures[i] > 0.0 ? u[i] / std::sqrt(out.measures[i]) : 0.0;
  }
  return out;
}

}  // namespace gsp
