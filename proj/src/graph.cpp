#include "gsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "gsp/error.hpp"

namespace gsp {

int StepGraphon::cell(double x) const {
  if (x <= 0.0) return 0;
  if (x >= 1.0) return q() - 1;
  // boundaries are ascending; find the cell [b_i, b_{i+1}) containing x.
  auto it = std::upper_bound(boundaries.begin(), boundaries.end(), x);
  int idx = int(it - boundaries.begin()) - 1;
  return std::clamp(idx, 0, q() - 1);
}

Graph build_graph(const std::vector<Edge>& edges, int n) {
  if (n <= 0) throw error(errc::empty_graph, "build_graph: n must be positive");
  std::map<std::pair<int, int>, double> dedup;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw error(errc::invalid_edge, "build_graph: edge index out of range");
    if (e.u == e.v) continue;  // self-loops dropped
    auto key = std::minmax(e.u, e.v);
    dedup[key] = e.w;  // last weight wins
  }
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(2 * dedup.size());
  for (const auto& [uv, w] : dedup) {
    trips.emplace_back(uv.first, uv.second, w);
    trips.emplace_back(uv.second, uv.first, w);
  }
  Graph g;
  g.n = n;
  g.adjacency.resize(n, n);
  g.adjacency.setFromTriplets(trips.begin(), trips.end());
  g.degrees = g.adjacency * Eigen::VectorXd::Ones(n);
  return g;
}

static Eigen::VectorXd inv_sqrt_degrees(const Graph& g) {
  Eigen::VectorXd dinv(g.n);
  for (int i = 0; i < g.n; ++i)
    dinv[i] = g.degrees[i] > 0.0 ? 1.0 / std::sqrt(g.degrees[i]) : 0.0;
  return dinv;
}

Eigen::SparseMatrix<double> normalized_laplacian(const Graph& g) {
  Eigen::VectorXd dinv = inv_sqrt_degrees(g);
  Eigen::SparseMatrix<double> lap = -(dinv.asDiagonal() * g.adjacency * dinv.asDiagonal());
  Eigen::SparseMatrix<double> eye(g.n, g.n);
  eye.setIdentity();
  lap += eye;
  return lap;
}

Eigen::MatrixXd normalized_laplacian_dense(const Graph& g) {
  Eigen::VectorXd dinv = inv_sqrt_degrees(g);
  Eigen::MatrixXd lap = Eigen::MatrixXd(g.adjacency);
  lap = -(dinv.asDiagonal() * lap * dinv.asDiagonal());
  lap.diagonal().array() += 1.0;
  return lap;
}

double total_variation(const Graph& g, const Signal& x) {
  if (x.size() != g.n)
    throw error(errc::dimension_mismatch, "total_variation: signal length mismatch");
  Eigen::VectorXd dinv = inv_sqrt_degrees(g);
  Eigen::VectorXd scaled = dinv.asDiagonal() * x;
  return x.squaredNorm() - scaled.dot(g.adjacency * scaled);
}

StepGraphon induced_graphon(const Graph& g) {
  StepGraphon w;
  w.boundaries.resize(g.n + 1);
  for (int i = 0; i <= g.n; ++i) w.boundaries[i] = double(i) / g.n;
  w.boundaries.front() = 0.0;
  w.boundaries.back() = 1.0;
  w.block = Eigen::MatrixXd(g.adjacency);
  return w;
}

Graph sort_by_degree(const Graph& g, std::vector<int>* order) {
  std::vector<int> idx(g.n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return g.degrees[a] < g.degrees[b]; });
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[idx[i]] = i;
  std::vector<Edge> edges;
  edges.reserve(g.adjacency.nonZeros() / 2);
  for (int k = 0; k < g.adjacency.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(g.adjacency, k); it; ++it)
      if (it.row() < it.col()) edges.push_back({pos[it.row()], pos[int(it.col())], it.value()});
  if (order) *order = idx;
  return build_graph(edges, g.n);
}

}  // namespace gsp
