#pragma once

#include <vector>

#include "gsp/graph.hpp"
#include "gsp/rng.hpp"

namespace testutil {

inline gsp::Graph path3() {
  return gsp::build_graph({{0, 1}, {1, 2}}, 3);
}

inline gsp::Graph k2() {
  return gsp::build_graph({{0, 1}}, 2);
}

inline gsp::Graph clique(int n, int offset = 0, int total = -1) {
  std::vector<gsp::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({offset + i, offset + j, 1.0});
  return gsp::build_graph(edges, total < 0 ? offset + n : total);
}

inline gsp::Graph two_cliques(int size) {
  std::vector<gsp::Edge> edges;
  for (int b = 0; b < 2; ++b)
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j)
        edges.push_back({b * size + i, b * size + j, 1.0});
  return gsp::build_graph(edges, 2 * size);
}

/// Erdos-Renyi draw used across property tests.
inline gsp::Graph random_graph(int n, double p, std::uint64_t seed) {
  gsp::Rng rng(seed);
  std::vector<gsp::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_double() < p) edges.push_back({i, j, 1.0});
  return gsp::build_graph(edges, n);
}

}  // namespace testutil
