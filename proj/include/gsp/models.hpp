#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gsp/graph.hpp"

namespace gsp {

/// K uniform-on-disjoint-intervals components with weights and a block
/// kernel: k(w, t) = kernel(component(w), component(t)).
struct MixtureModel {
  int K = 0;
  std::vector<double> weights;                      // sum to 1
  std::vector<std::pair<double, double>> supports;  // disjoint, ascending
  Eigen::MatrixXd kernel;                           // K x K, symmetric, in [0,1]

  /// Component whose support contains w, or -1 outside every support.
  int component(double w) const;
  void validate() const;
};

struct LatentGraph {
  Graph graph;
  std::vector<double> latents;  // ascending when sampled with sort=true
  std::vector<int> components;  // block labels, -1 when not drawn from a mixture
};

struct DifficultyReport {
  double s_max = 0.0;
  double coupling = 0.0;
  double gamma_min = 0.0;
  double b_max = 0.0;
  double phi = 0.0;
};

/// Piecewise-constant function over an interval partition of the real line.
struct StepFunction {
  std::vector<double> breaks;  // ascending, size = values.size() + 1
  std::vector<double> values;
  double operator()(double x) const;
};

/// Step graphon with boundaries at the cumulative sizes and blocks B.
StepGraphon sbm_graphon(const Eigen::MatrixXd& blocks, const std::vector<double>& sizes);

/// Latent positions i.i.d. Uniform[0,1] (sorted when sort is set); edges
/// Bernoulli under the graphon; labels are the graphon cell of each latent.
LatentGraph sample_graph(const StepGraphon& w, int n, std::uint64_t seed, bool sort);

/// Exact-weight (noiseless) blockmodel matrix with the given block sizes.
Graph noiseless_blockmodel(const Eigen::MatrixXd& blocks, const std::vector<int>& sizes);

/// Inverse-CDF pushforward: the equivalent graphon has boundaries at the
/// cumulative component weights and block values equal to the kernel.
StepGraphon mixture_to_graphon(const MixtureModel& mm);

/// Separability statistics (similarity, coupling, indivisibility,
/// boundedness) and the composite difficulty value. Indivisibility is brute
/// forced over threshold subsets of a grid-cell split of each support.
DifficultyReport difficulty(const MixtureModel& mm, int grid = 64);

/// Kernelized-density concentration tests. A_sets live on [0,1] (the
/// pushed-forward graphon domain) as disjoint unions of intervals.
std::pair<bool, bool> check_component_uniqueness(
    const MixtureModel& mm, const std::vector<std::vector<std::pair<double, double>>>& a_sets,
    double eps);

/// q_i = sqrt(integral of k(w, .) dP_i), a step function on the supports
/// (zero off-support).
StepFunction sqrt_kernelized_density(const MixtureModel& mm, int i);

/// Eigenvalues/step eigenfunctions of the normalized adjacency operator of a
/// step graphon, in the measure-weighted inner product. Eigenvalues are
/// returned descending by value (the finite-rank part; the essential spectrum
/// contributes nothing on step functions).
struct StepSpectrum {
  Eigen::VectorXd eigenvalues;     // descending adjacency eigenvalues
  Eigen::MatrixXd eigenfunctions;  // q x q block values, L2-orthonormal under the measure
  std::vector<double> measures;    // block widths
};
StepSpectrum step_graphon_adjacency_spectrum(const StepGraphon& w);

}  // namespace gsp
