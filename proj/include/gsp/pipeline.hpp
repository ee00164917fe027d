#pragma once

#include <cstdint>

#include "gsp/graph.hpp"
#include "gsp/sampling.hpp"

namespace gsp {

/// Weighted coarse graph over a q-equipartition of [0,1].
struct CoarseGraph {
  int q = 0;
  Eigen::MatrixXd weights;             // q x q, exact graphon integrals
  std::vector<double> interval_bounds;  // q + 1
};

struct IntervalSample {
  std::vector<int> interval_indices;  // selection order
  int q = 0;
  int p = 0;
};

enum class NodeStrategy { uniform, community };

/// Exact integral of the induced step graphon over coarse cells, including
/// fractional overlap when q does not divide n.
CoarseGraph coarsen(const Graph& g, int q);
/// Serial reference for the parallel kernel; must agree to the last bit.
CoarseGraph coarsen_serial(const Graph& g, int q);

/// Greedy signal sampling on the coarse graph; returns interval indices.
IntervalSample sample_intervals(const CoarseGraph& cg, int p);

/// Per-interval node draw: floor(m/(p-1)) from each of the first p-1 selected
/// intervals, remainder from the last; all m from the single interval when
/// p == 1. Shortfalls redistribute over the other selected intervals.
SampleSet sample_nodes(const Graph& g, const IntervalSample& iv, int m, NodeStrategy strategy,
                       int communities, std::uint64_t seed);

struct GraphonSampleResult {
  SampleSet nodes;
  IntervalSample intervals;  // reusable on other graphs from the same graphon
};

GraphonSampleResult graphon_sample(const Graph& g, int q, int p, int m, NodeStrategy strategy,
                                   int communities, std::uint64_t seed);

/// Node-to-interval map: node k covers [k/n, (k+1)/n); it belongs to the
/// coarse interval containing its left endpoint, i.e. floor(k*q/n).
int node_interval(int node, int n, int q);

}  // namespace gsp
