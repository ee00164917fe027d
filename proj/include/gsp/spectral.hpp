#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <optional>

#include "gsp/graph.hpp"

namespace gsp {

/// Ascending eigenvalues and column-orthonormal eigenvectors of a symmetric
/// operator. May be partial (k < source_n columns).
struct Spectrum {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // source_n x k
  int source_n = 0;

  int k() const { return int(eigenvalues.size()); }
  bool full() const { return k() == source_n; }
};

/// Dense symmetric eigendecomposition; the k smallest pairs when k is given.
/// Deterministic: sign rule (first entry above 1e-12 is positive) plus
/// Gram-Schmidt canonicalization inside degenerate clusters (gap < 1e-8).
Spectrum eig_sym(const Eigen::MatrixXd& m, std::optional<int> k = std::nullopt);

/// Lanczos with full reorthogonalization for the k smallest eigenpairs.
/// Same determinism contract as the dense path.
Spectrum eig_sym(const Eigen::SparseMatrix<double>& m, int k);

/// Dense path for n <= 2000, Lanczos beyond.
Spectrum laplacian_spectrum(const Graph& g, std::optional<int> k = std::nullopt);

Eigen::VectorXd gft(const Spectrum& spec, const Signal& x);
Signal igft(const Spectrum& spec, const Eigen::VectorXd& coeffs);

/// Unit-norm random signal in the span of the first band eigenvectors.
Signal synth_bandlimited(const Spectrum& spec, int band, std::uint64_t seed);

/// True iff |x_hat_i| <= tol * ||x|| for every eigenvalue above cutoff.
bool pw_membership(const Signal& x, const Spectrum& spec, double cutoff, double tol = 1e-8);

}  // namespace gsp
