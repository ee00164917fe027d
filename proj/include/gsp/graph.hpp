#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <tuple>
#include <vector>

namespace gsp {

using Signal = Eigen::VectorXd;

/// Finite undirected weighted graph. Adjacency is symmetric, nonnegative,
/// zero-diagonal; degrees are the adjacency row sums.
struct Graph {
  int n = 0;
  Eigen::SparseMatrix<double> adjacency;
  Eigen::VectorXd degrees;

  double weight(int u, int v) const { return adjacency.coeff(u, v); }
};

/// Piecewise-constant symmetric kernel on [0,1]^2 over an interval partition.
struct StepGraphon {
  std::vector<double> boundaries;  // ascending, boundaries.front()==0, back()==1
  Eigen::MatrixXd block;           // q x q, symmetric, entries in [0,1]

  int q() const { return int(block.rows()); }
  /// Index of the partition cell containing x (cells are [b_i, b_{i+1})).
  int cell(double x) const;
  double operator()(double x, double y) const { return block(cell(x), cell(y)); }
};

struct Edge {
  int u;
  int v;
  double w = 1.0;
};

/// Symmetrizes, deduplicates (last weight wins) and drops self-loops.
Graph build_graph(const std::vector<Edge>& edges, int n);

/// L = I - (D^+)^{1/2} A (D^+)^{1/2}. Isolated nodes get diagonal entry 1.
Eigen::SparseMatrix<double> normalized_laplacian(const Graph& g);
Eigen::MatrixXd normalized_laplacian_dense(const Graph& g);

/// x^T L x.
double total_variation(const Graph& g, const Signal& x);

/// Step graphon over the n-equipartition with block values A.
StepGraphon induced_graphon(const Graph& g);

/// Returns a copy with nodes relabeled by ascending degree (stable in the
/// original index on ties). Real graphs are sorted this way before the
/// graphon pipeline runs.
Graph sort_by_degree(const Graph& g, std::vector<int>* order = nullptr);

}  // namespace gsp
