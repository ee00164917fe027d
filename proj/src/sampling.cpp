#include "gsp/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gsp/error.hpp"

namespace gsp {

RankResult uniqueness_rank(const Spectrum& spec, const std::vector<int>& sample, int band,
                           double tol) {
  if (sample.empty()) throw error(errc::empty_set, "uniqueness_rank: empty sample set");
  if (band < 1 || band > spec.k())
    throw error(errc::band_error, "uniqueness_rank: band exceeds available eigenpairs");
  Eigen::MatrixXd psi(sample.size(), band);
  for (size_t r = 0; r < sample.size(); ++r)
    psi.row(r) = spec.eigenvectors.row(sample[r]).head(band);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(psi);
  const auto& sv = svd.singularValues();
  double smax = sv.size() ? sv[0] : 0.0;
  if (tol < 0.0)
    tol = double(std::max<size_t>(sample.size(), band)) *
          std::numeric_limits<double>::epsilon() * smax;
  else
    tol *= smax;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > tol) ++rank;
  return {rank, rank == band};
}

SampleSet ge_pivot_sample(const Eigen::MatrixXd& vk) {
  const int n = int(vk.rows());
  const int k = int(vk.cols());
  if (k < 1 || n < k) throw error(errc::invalid_params, "ge_pivot_sample: need n >= K >= 1");
  Eigen::MatrixXd work = vk;
  std::vector<bool> used(n, false);
  SampleSet out;
  out.method = "ge";
  out.budget = k;
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    double best = 0.0;
    for (int r = 0; r < n; ++r) {
      if (used[r]) continue;
      double v = std::abs(work(r, col));
      if (v > best + 1e-12) {
        best = v;
        pivot = r;
      }
    }
    if (pivot < 0 || best <= 1e-12)
      throw error(errc::rank_deficient, "ge_pivot_sample: eigenvector matrix is rank deficient");
    used[pivot] = true;
    out.indices.push_back(pivot);
    for (int r = 0; r < n; ++r) {
      if (used[r]) continue;
      double factor = work(r, col) / work(pivot, col);
      if (factor != 0.0) work.row(r) -= factor * work.row(pivot);
    }
  }
  return out;
}

std::pair<double, Eigen::VectorXd> smallest_eigenpair(const Eigen::MatrixXd& m) {
  const int n = int(m.rows());
  // Reflection: eigenvalues of 2I - M are 2 - lambda, so the dominant pair of
  // the reflected operator is the smallest pair of M.
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = 1.0 + double(i + 1) / n;
  v.normalize();
  double theta = 0.0;
  for (int iter = 0; iter < 5000; ++iter) {
    Eigen::VectorXd w = 2.0 * v - m * v;
    double norm = w.norm();
    if (norm < 1e-14) break;  // M == 2I on this subspace; v is already an eigenvector
    w /= norm;
    theta = w.dot(2.0 * w - m * w);
    if ((2.0 * w - m * w - theta * w).norm() <= 1e-8) {
      v = w;
      break;
    }
    v = w;
  }
  double lambda = v.dot(m * v);
  return {lambda, v};
}

SampleSet greedy_sample(const Graph& g, int m) {
  if (m < 1 || m > g.n) throw error(errc::budget_error, "greedy_sample: budget out of range");
  Eigen::MatrixXd lap = normalized_laplacian_dense(g);
  std::vector<bool> picked(g.n, false);
  SampleSet out;
  out.method = "greedy";
  out.budget = m;
  std::vector<int> rest(g.n);
  std::iota(rest.begin(), rest.end(), 0);
  for (int step = 0; step < m; ++step) {
    if (rest.empty()) break;
    Eigen::MatrixXd sub(rest.size(), rest.size());
    for (size_t a = 0; a < rest.size(); ++a)
      for (size_t b = 0; b < rest.size(); ++b) sub(a, b) = lap(rest[a], rest[b]);
    Eigen::VectorXd psi = smallest_eigenpair(sub).second;
    int best_local = 0;
    double best = -1.0;
    for (int i = 0; i < psi.size(); ++i) {
      double v = std::abs(psi[i]);
      if (v > best + 1e-12) {
        best = v;
        best_local = i;
      }
    }
    int chosen = rest[best_local];
    picked[chosen] = true;
    out.indices.push_back(chosen);
    rest.erase(rest.begin() + best_local);
  }
  return out;
}

Signal reconstruct(const Spectrum& spec, int band, const SampleSet& sample,
                   const Eigen::VectorXd& observed) {
  if (band < 1 || band > spec.k())
    throw error(errc::band_error, "reconstruct: band exceeds available eigenpairs");
  if (int(sample.indices.size()) < band)
    throw error(errc::rank_deficient, "reconstruct: fewer samples than band");
  if (observed.size() != long(sample.indices.size()))
    throw error(errc::dimension_mismatch, "reconstruct: observation length mismatch");
  RankResult rr = uniqueness_rank(spec, sample.indices, band);
  if (!rr.certified)
    throw error(errc::rank_deficient, "reconstruct: sample set does not determine the band");
  Eigen::MatrixXd psi(sample.indices.size(), band);
  for (size_t r = 0; r < sample.indices.size(); ++r)
    psi.row(r) = spec.eigenvectors.row(sample.indices[r]).head(band);
  Eigen::VectorXd coeffs = psi.colPivHouseholderQr().solve(observed);
  return spec.eigenvectors.leftCols(band) * coeffs;
}

}  // namespace gsp
