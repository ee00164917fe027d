#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsp/graph.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

/// Ordered node (or interval) indices plus provenance.
struct SampleSet {
  std::vector<int> indices;
  std::string method;  // ge | greedy | graphon | random
  std::optional<std::uint64_t> seed;
  int budget = 0;
  bool budget_met = true;
};

struct RankResult {
  int rank = 0;
  bool certified = false;
};

/// Numerical rank of the row restriction of the first band eigenvectors to
/// the sample set. certified == (rank == band) means the set is a uniqueness
/// set for PW up to the band eigenvalue. tol < 0 selects the default
/// max(|S|, band) * eps * sigma_max.
RankResult uniqueness_rank(const Spectrum& spec, const std::vector<int>& sample, int band,
                           double tol = -1.0);

/// Gaussian elimination with partial row pivoting over the columns of vk;
/// returns the K pivot rows in pivot order. Ties within 1e-12 go to the
/// lowest row index.
SampleSet ge_pivot_sample(const Eigen::MatrixXd& vk);

/// Spectral-free greedy: repeatedly take the largest-magnitude entry of the
/// minimum-variation signal supported on the unsampled nodes.
SampleSet greedy_sample(const Graph& g, int m);

/// Least-squares fit of band coefficients to observations on the sample set.
Signal reconstruct(const Spectrum& spec, int band, const SampleSet& sample,
                   const Eigen::VectorXd& observed);

/// Smallest eigenpair of a dense symmetric operator with spectrum in [0,2],
/// via power iteration on the reflected operator (tol 1e-8, cap 5000).
std::pair<double, Eigen::VectorXd> smallest_eigenpair(const Eigen::MatrixXd& m);

}  // namespace gsp
