#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gsp/graph.hpp"

namespace gsp {

/// Monte-Carlo heat-kernel PageRank mass. Scores sum to exactly 1 (integer
/// visit counts over the walk budget).
struct HkprScores {
  Eigen::VectorXd scores;
  double t = 0.0;
  long walks = 0;
  std::vector<int> seeds;
};

/// Each walk starts uniformly on the seed set, draws k ~ Poisson(t) truncated
/// at ceil(10 t) + 20, and takes k uniform-neighbor steps (stuck walks stay
/// put). Deterministic for a fixed seed regardless of thread count: every
/// walk owns a derived RNG stream and counts are reduced as integers.
HkprScores heat_kernel_pagerank(const Graph& g, const std::vector<int>& seeds, double t,
                                long walks, std::uint64_t rng_seed);

/// Serial reference for the parallel kernel above; must agree bitwise.
HkprScores heat_kernel_pagerank_serial(const Graph& g, const std::vector<int>& seeds, double t,
                                       long walks, std::uint64_t rng_seed);

/// Orders subset nodes by score/degree and returns the prefix of minimum
/// conductance within the induced subgraph, plus the rest of the subset.
std::pair<std::vector<int>, std::vector<int>> sweep_cut(const Graph& g, const HkprScores& scores,
                                                        const std::vector<int>& subset);

/// Recursive bisection into exactly c groups (largest group split next).
/// When c >= |subset| the result is singletons padded with empty groups.
std::vector<std::vector<int>> community_split(const Graph& g, const std::vector<int>& subset,
                                              int c, std::uint64_t rng_seed);

}  // namespace gsp
