#include "gsp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gsp/error.hpp"
#include "gsp/rng.hpp"

namespace gsp {

namespace {

constexpr double kClusterGap = 1e-8;
constexpr double kSignFloor = 1e-12;

void apply_sign_rule(Eigen::MatrixXd& vecs) {
  for (int j = 0; j < vecs.cols(); ++j) {
    double lead = 0.0;
    for (int i = 0; i < vecs.rows(); ++i) {
      if (std::abs(vecs(i, j)) > kSignFloor) {
        lead = vecs(i, j);
        break;
      }
    }
    if (lead == 0.0) lead = vecs(0, j);
    if (lead < 0.0) vecs.col(j) = -vecs.col(j);
  }
}

// Degenerate clusters make the returned basis solver-dependent. Re-derive a
// canonical basis of each cluster's eigenspace by Gram-Schmidt over the
// projections of the coordinate vectors, taken in index order.
void canonicalize_clusters(Eigen::VectorXd& vals, Eigen::MatrixXd& vecs) {
  const int k = int(vals.size());
  int start = 0;
  while (start < k) {
    int end = start + 1;
    while (end < k && vals[end] - vals[end - 1] < kClusterGap) ++end;
    const int r = end - start;
    if (r > 1) {
      Eigen::MatrixXd sub = vecs.middleCols(start, r);  // n x r
      Eigen::MatrixXd basis(vecs.rows(), r);
      int got = 0;
      for (int i = 0; i < vecs.rows() && got < r; ++i) {
        Eigen::VectorXd w = sub * sub.row(i).transpose();  // projector applied to e_i
        for (int b = 0; b < got; ++b) w -= basis.col(b).dot(w) * basis.col(b);
        for (int b = 0; b < got; ++b) w -= basis.col(b).dot(w) * basis.col(b);
        double norm = w.norm();
        if (norm > 1e-8) basis.col(got++) = w / norm;
      }
      if (got == r) vecs.middleCols(start, r) = basis;
    }
    start = end;
  }
  apply_sign_rule(vecs);
}

void require_symmetric(const Eigen::MatrixXd& m) {
  double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10)
    throw error(errc::not_symmetric, "eig_sym: operator asymmetry " + std::to_string(asym));
}

}  // namespace

Spectrum eig_sym(const Eigen::MatrixXd& m, std::optional<int> k) {
  if (m.rows() != m.cols())
    throw error(errc::dimension_mismatch, "eig_sym: operator must be square");
  if (m.rows() > 0) require_symmetric(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw error(errc::no_convergence, "eig_sym: dense solver failed");
  Spectrum spec;
  spec.source_n = int(m.rows());
  int keep = k ? std::min(*k, spec.source_n) : spec.source_n;
  spec.eigenvalues = solver.eigenvalues().head(keep);
  spec.eigenvectors = solver.eigenvectors().leftCols(keep);
  canonicalize_clusters(spec.eigenvalues, spec.eigenvectors);
  return spec;
}

Spectrum eig_sym(const Eigen::SparseMatrix<double>& m, int k) {
  const int n = int(m.rows());
  if (m.rows() != m.cols())
    throw error(errc::dimension_mismatch, "eig_sym: operator must be square");
  {
    Eigen::SparseMatrix<double> diff = Eigen::SparseMatrix<double>(m.transpose()) - m;
    double asym = 0.0;
    for (int c = 0; c < diff.outerSize(); ++c)
      for (Eigen::SparseMatrix<double>::InnerIterator it(diff, c); it; ++it)
        asym = std::max(asym, std::abs(it.value()));
    if (asym > 1e-10)
      throw error(errc::not_symmetric, "eig_sym: operator asymmetry " + std::to_string(asym));
  }
  k = std::min(k, n);
  if (k <= 0) throw error(errc::invalid_params, "eig_sym: k must be positive");

  // Lanczos with full (twice-applied) reorthogonalization. The basis is grown
  // until the k smallest Ritz pairs hit residual 1e-10 or the Krylov space is
  // exhausted, at which point the decomposition is exact.
  Eigen::MatrixXd basis(n, std::min(n, std::max(4 * k + 32, 64)));
  std::vector<double> alpha, beta;
  Rng rng(0x5eedf00dULL);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.next_normal();
  v.normalize();
  basis.col(0) = v;

  auto reorth = [&](Eigen::VectorXd& w, int cols) {
    for (int pass = 0; pass < 2; ++pass) {
      Eigen::VectorXd proj = basis.leftCols(cols).transpose() * w;
      w -= basis.leftCols(cols) * proj;
    }
  };

  int j = 0;
  long iters = 0;
  const long cap = 10L * n;
  Eigen::VectorXd ritz_vals;
  Eigen::MatrixXd tri_vecs;
  while (true) {
    if (++iters > cap)
      throw error(errc::no_convergence,
                  "eig_sym: Lanczos exceeded " + std::to_string(cap) + " iterations");
    if (j + 1 > basis.cols()) basis.conservativeResize(Eigen::NoChange, std::min<long>(n, 2 * basis.cols()));
    Eigen::VectorXd w = m * basis.col(j);
    double a = basis.col(j).dot(w);
    alpha.push_back(a);
    w -= a * basis.col(j);
    if (j > 0) w -= beta[j - 1] * basis.col(j - 1);
    reorth(w, j + 1);
    double b = w.norm();

    const int dim = j + 1;
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) tri(i, i) = alpha[i];
    for (int i = 0; i + 1 < dim; ++i) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tsolve(tri);
    ritz_vals = tsolve.eigenvalues();
    tri_vecs = tsolve.eigenvectors();

    bool converged = dim >= k;
    if (converged) {
      for (int i = 0; i < k; ++i) {
        double resid = b * std::abs(tri_vecs(dim - 1, i));
        if (resid > 1e-10 * std::max(1.0, std::abs(ritz_vals[i]))) {
          converged = false;
          break;
        }
      }
    }
    if (converged || dim == n) break;

    if (b < 1e-13) {
      // Invariant subspace; continue from a fresh direction outside it.
      Eigen::VectorXd fresh(n);
      for (int i = 0; i < n; ++i) fresh[i] = rng.next_normal();
      reorth(fresh, dim);
      double norm = fresh.norm();
      if (norm < 1e-13) break;
      w = fresh;
      b = norm;
      w /= b;
      beta.push_back(0.0);
      ++j;
      if (j + 1 > basis.cols()) basis.conservativeResize(Eigen::NoChange, std::min<long>(n, 2 * basis.cols()));
      basis.col(j) = w;
      continue;
    }
    beta.push_back(b);
    ++j;
    if (j + 1 > basis.cols()) basis.conservativeResize(Eigen::NoChange, std::min<long>(n, 2 * basis.cols()));
    basis.col(j) = w / b;
  }

  const int dim = j + 1;
  Spectrum spec;
  spec.source_n = n;
  spec.eigenvalues = ritz_vals.head(k);
  spec.eigenvectors = basis.leftCols(dim) * tri_vecs.leftCols(k);
  for (int i = 0; i < k; ++i) spec.eigenvectors.col(i).normalize();
  canonicalize_clusters(spec.eigenvalues, spec.eigenvectors);
  return spec;
}

Spectrum laplacian_spectrum(const Graph& g, std::optional<int> k) {
  if (g.n <= 2000 || !k) return eig_sym(normalized_laplacian_dense(g), k);
  return eig_sym(normalized_laplacian(g), *k);
}

Eigen::VectorXd gft(const Spectrum& spec, const Signal& x) {
  if (x.size() != spec.source_n)
    throw error(errc::dimension_mismatch, "gft: signal length mismatch");
  return spec.eigenvectors.transpose() * x;
}

Signal igft(const Spectrum& spec, const Eigen::VectorXd& coeffs) {
  if (coeffs.size() != spec.k())
    throw error(errc::dimension_mismatch, "igft: coefficient length mismatch");
  return spec.eigenvectors * coeffs;
}

Signal synth_bandlimited(const Spectrum& spec, int band, std::uint64_t seed) {
  if (band < 1 || band > spec.k())
    throw error(errc::band_error, "synth_bandlimited: band out of range");
  Rng rng(seed);
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(spec.k());
  for (int i = 0; i < band; ++i) coeffs[i] = rng.next_normal();
  Signal x = spec.eigenvectors * coeffs;
  double norm = x.norm();
  if (norm > 0.0) x /= norm;
  return x;
}

bool pw_membership(const Signal& x, const Spectrum& spec, double cutoff, double tol) {
  if (!spec.full())
    throw error(errc::insufficient_spectrum, "pw_membership: full spectrum required");
  if (x.size() != spec.source_n)
    throw error(errc::dimension_mismatch, "pw_membership: signal length mismatch");
  Eigen::VectorXd coeffs = gft(spec, x);
  double scale = tol * x.norm();
  for (int i = 0; i < spec.k(); ++i)
    if (spec.eigenvalues[i] > cutoff && std::abs(coeffs[i]) > scale) return false;
  return true;
}

}  // namespace gsp
