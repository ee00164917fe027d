#include "gsp/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gsp/error.hpp"
#include "gsp/local_cluster.hpp"
#include "gsp/rng.hpp"

namespace gsp {

int node_interval(int node, int n, int q) {
  return int((long(node) * q) / n);  // exact left-endpoint rule
}

namespace {

// Both lanes accumulate per-chunk partials and reduce them in chunk order, so
// the serial and parallel results are bitwise identical for any thread count.
CoarseGraph run_coarsen(const Graph& g, int q, bool parallel) {
  if (q < 1 || q > g.n) throw error(errc::invalid_partition, "coarsen: need 1 <= q <= n");
  const int n = g.n;
  const int chunks = 64;
  std::vector<Eigen::MatrixXd> partial(chunks, Eigen::MatrixXd::Zero(q, q));

  auto do_chunk = [&](int c) {
    const int lo = int(long(c) * g.adjacency.outerSize() / chunks);
    const int hi = int(long(c + 1) * g.adjacency.outerSize() / chunks);
    Eigen::MatrixXd& acc = partial[c];
    for (int col = lo; col < hi; ++col) {
      const double jl = double(col) / n, jr = double(col + 1) / n;
      const int jb = node_interval(col, n, q);
      for (Eigen::SparseMatrix<double>::InnerIterator it(g.adjacency, col); it; ++it) {
        const int row = int(it.row());
        const double il = double(row) / n, ir = double(row + 1) / n;
        const int ia = node_interval(row, n, q);
        for (int a = ia; a <= std::min(ia + 1, q - 1); ++a) {
          double ov_a = std::min(ir, double(a + 1) / q) - std::max(il, double(a) / q);
          if (ov_a <= 0.0) continue;
          for (int b = jb; b <= std::min(jb + 1, q - 1); ++b) {
            double ov_b = std::min(jr, double(b + 1) / q) - std::max(jl, double(b) / q);
            if (ov_b <= 0.0) continue;
            acc(a, b) += it.value() * ov_a * ov_b;
          }
        }
      }
    }
  };

  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) do_chunk(c);
  } else {
    for (int c = 0; c < chunks; ++c) do_chunk(c);
  }

  CoarseGraph cg;
  cg.q = q;
  cg.weights = Eigen::MatrixXd::Zero(q, q);
  for (int c = 0; c < chunks; ++c) cg.weights += partial[c];
  cg.interval_bounds.resize(q + 1);
  for (int i = 0; i <= q; ++i) cg.interval_bounds[i] = double(i) / q;
  return cg;
}

Graph coarse_as_graph(const CoarseGraph& cg) {
  std::vector<Edge> edges;
  for (int i = 0; i < cg.q; ++i)
    for (int j = i + 1; j < cg.q; ++j)
      if (cg.weights(i, j) > 0.0) edges.push_back({i, j, cg.weights(i, j)});
  return build_graph(edges, cg.q);
}

// Draw `take` nodes uniformly without replacement (partial Fisher-Yates over
// the ascending node list).
std::vector<int> draw_uniform(std::vector<int> pool, int take, Rng& rng) {
  take = std::min<int>(take, int(pool.size()));
  for (int i = 0; i < take; ++i) {
    size_t j = i + size_t(rng.next_below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(take);
  return pool;
}

std::vector<int> draw_community(const Graph& g, const std::vector<int>& pool, int take,
                                int communities, Rng& rng) {
  auto groups = community_split(g, pool, communities, rng.next_u64());
  // Equal share per community, remainder round-robin; shortfalls inside one
  // community spill into the next pass.
  std::vector<int> quota(groups.size(), take / int(groups.size()));
  for (int r = 0; r < take % int(groups.size()); ++r) ++quota[r];
  std::vector<int> out;
  bool progress = true;
  int owed = take;
  while (owed > 0 && progress) {
    progress = false;
    for (size_t gi = 0; gi < groups.size() && owed > 0; ++gi) {
      int want = std::min(quota[gi], owed);
      if (want <= 0) continue;
      auto got = draw_uniform(groups[gi], want, rng);
      for (int v : got) {
        groups[gi].erase(std::find(groups[gi].begin(), groups[gi].end(), v));
        out.push_back(v);
      }
      owed -= int(got.size());
      quota[gi] = groups[gi].empty() ? 0 : 1;  // round-robin for leftovers
      if (!got.empty()) progress = true;
    }
  }
  return out;
}

}  // namespace

CoarseGraph coarsen(const Graph& g, int q) { return run_coarsen(g, q, true); }
CoarseGraph coarsen_serial(const Graph& g, int q) { return run_coarsen(g, q, false); }

IntervalSample sample_intervals(const CoarseGraph& cg, int p) {
  if (p < 1 || p > cg.q) throw error(errc::invalid_params, "sample_intervals: need 1 <= p <= q");
  SampleSet s = greedy_sample(coarse_as_graph(cg), p);
  IntervalSample iv;
  iv.q = cg.q;
  iv.p = p;
  iv.interval_indices = s.indices;
  return iv;
}

SampleSet sample_nodes(const Graph& g, const IntervalSample& iv, int m, NodeStrategy strategy,
                       int communities, std::uint64_t seed) {
  const int p = int(iv.interval_indices.size());
  if (p < 1) throw error(errc::invalid_params, "sample_nodes: empty interval sample");
  if (m < p) throw error(errc::invalid_params, "sample_nodes: budget below interval count");
  if (strategy == NodeStrategy::community && communities < 1)
    throw error(errc::invalid_params, "sample_nodes: need communities >= 1");

  std::vector<std::vector<int>> pools(p);
  for (int k = 0; k < g.n; ++k) {
    int cell = node_interval(k, g.n, iv.q);
    for (int j = 0; j < p; ++j)
      if (iv.interval_indices[j] == cell) pools[j].push_back(k);
  }

  std::vector<int> quota(p, 0);
  if (p == 1) {
    quota[0] = m;
  } else {
    int r = m / (p - 1);
    for (int j = 0; j < p - 1; ++j) quota[j] = r;
    quota[p - 1] = m - (p - 1) * r;
  }

  // Cap quotas at supply and push the deficit round-robin onto the other
  // selected intervals while any of them has spare nodes.
  int deficit = 0;
  std::vector<int> spare(p);
  for (int j = 0; j < p; ++j) {
    int cap = int(pools[j].size());
    if (quota[j] > cap) {
      deficit += quota[j] - cap;
      quota[j] = cap;
    }
    spare[j] = cap - quota[j];
  }
  while (deficit > 0) {
    bool moved = false;
    for (int j = 0; j < p && deficit > 0; ++j) {
      if (spare[j] > 0) {
        ++quota[j];
        --spare[j];
        --deficit;
        moved = true;
      }
    }
    if (!moved) break;
  }

  SampleSet out;
  out.method = "graphon";
  out.seed = seed;
  out.budget = m;
  out.budget_met = (deficit == 0);
  for (int j = 0; j < p; ++j) {
    if (quota[j] == 0) continue;
    Rng rng = Rng::split(seed, std::uint64_t(j) + 1);
    std::vector<int> got = strategy == NodeStrategy::uniform
                               ? draw_uniform(pools[j], quota[j], rng)
                               : draw_community(g, pools[j], quota[j], communities, rng);
    out.indices.insert(out.indices.end(), got.begin(), got.end());
  }
  return out;
}

GraphonSampleResult graphon_sample(const Graph& g, int q, int p, int m, NodeStrategy strategy,
                                   int communities, std::uint64_t seed) {
  CoarseGraph cg = coarsen(g, q);
  IntervalSample iv = sample_intervals(cg, p);
  GraphonSampleResult res;
  res.nodes = sample_nodes(g, iv, m, strategy, communities, seed);
  res.intervals = iv;
  return res;
}

}  // namespace gsp
