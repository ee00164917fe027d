#pragma once

#include <cstdint>
#include <vector>

#include "gsp/graph.hpp"

namespace gsp {

/// Nodes outside S with positive edge weight into S.
std::vector<int> neighborhood(const Graph& g, const std::vector<int>& s);

/// Doubled graph on S, N(S) and a mirror copy S'. Node order: S (given
/// order), then N(S) ascending, then S' mirroring S's order.
struct GammaGraph {
  Graph graph;
  int s_size = 0;
  int ns_size = 0;
  std::vector<int> original;  // original index per Gamma node (S' maps to S)
};
GammaGraph gamma_graph(const Graph& g, const std::vector<int>& s);

struct PoincareCertificate {
  std::vector<int> s;
  std::vector<int> ns;
  double lambda1 = 0.0;   // smallest nonzero eigenvalue of Gamma(S)'s Laplacian
  double lambda_big = 0.0;  // 1 / lambda1
  double bandwidth = 0.0;   // complement certifies PW_lambda for lambda < bandwidth
};

/// Smallest eigenvalue above 1e-9 of the Gamma(S) normalized Laplacian.
PoincareCertificate poincare_constant(const Graph& g, const std::vector<int>& s,
                                      double zero_threshold = 1e-9);

struct PoincareReport {
  int trials = 0;
  double max_ratio = 0.0;  // max ||x|| / ||Lx|| observed, must be <= Lambda
  bool passed = false;
};

/// Draws random signals supported on S and checks ||x|| <= Lambda ||Lx||
/// within 1e-9. A violation throws (it signals a construction bug).
PoincareReport verify_poincare(const Graph& g, const std::vector<int>& s, int trials,
                               std::uint64_t seed);

/// Checks one caller-supplied signal against the certificate. The signal
/// must be supported on S.
double poincare_ratio(const Graph& g, const PoincareCertificate& cert, const Signal& x);

}  // namespace gsp
