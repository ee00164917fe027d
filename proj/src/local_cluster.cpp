#include "gsp/local_cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gsp/error.hpp"
#include "gsp/rng.hpp"

namespace gsp {

namespace {

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> nbrs(g.n);
  for (int c = 0; c < g.adjacency.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(g.adjacency, c); it; ++it)
      if (it.value() > 0.0) nbrs[c].push_back(int(it.row()));
  return nbrs;
}

int walk_endpoint(const std::vector<std::vector<int>>& nbrs, const std::vector<int>& seeds,
                  double t, int k_max, Rng rng) {
  int node = seeds[size_t(rng.next_below(seeds.size()))];
  int steps = std::min(rng.next_poisson(t), k_max);
  for (int s = 0; s < steps; ++s) {
    const auto& nb = nbrs[node];
    if (nb.empty()) break;  // stuck walks stay put
    node = nb[size_t(rng.next_below(nb.size()))];
  }
  return node;
}

HkprScores run_hkpr(const Graph& g, const std::vector<int>& seeds, double t, long walks,
                    std::uint64_t rng_seed, bool parallel) {
  if (seeds.empty()) throw error(errc::empty_seeds, "heat_kernel_pagerank: empty seed set");
  if (t < 0.0 || walks < 1)
    throw error(errc::invalid_params, "heat_kernel_pagerank: need t >= 0 and walks >= 1");
  for (int s : seeds)
    if (s < 0 || s >= g.n)
      throw error(errc::invalid_params, "heat_kernel_pagerank: seed out of range");
  auto nbrs = adjacency_lists(g);
  const int k_max = int(std::ceil(10.0 * t)) + 20;
  std::vector<long> counts(g.n, 0);
  if (parallel) {
#pragma omp parallel
    {
      std::vector<long> local(g.n, 0);
#pragma omp for schedule(static)
      for (long w = 0; w < walks; ++w)
        ++local[walk_endpoint(nbrs, seeds, t, k_max, Rng::split(rng_seed, std::uint64_t(w)))];
#pragma omp critical
      for (int i = 0; i < g.n; ++i) counts[i] += local[i];
    }
  } else {
    for (long w = 0; w < walks; ++w)
      ++counts[walk_endpoint(nbrs, seeds, t, k_max, Rng::split(rng_seed, std::uint64_t(w)))];
  }
  HkprScores out;
  out.t = t;
  out.walks = walks;
  out.seeds = seeds;
  out.scores.resize(g.n);
  for (int i = 0; i < g.n; ++i) out.scores[i] = double(counts[i]) / double(walks);
  return out;
}

}  // namespace

HkprScores heat_kernel_pagerank(const Graph& g, const std::vector<int>& seeds, double t,
                                long walks, std::uint64_t rng_seed) {
  return run_hkpr(g, seeds, t, walks, rng_seed, true);
}

HkprScores heat_kernel_pagerank_serial(const Graph& g, const std::vector<int>& seeds, double t,
                                       long walks, std::uint64_t rng_seed) {
  return run_hkpr(g, seeds, t, walks, rng_seed, false);
}

std::pair<std::vector<int>, std::vector<int>> sweep_cut(const Graph& g, const HkprScores& scores,
                                                        const std::vector<int>& subset) {
  if (subset.empty()) throw error(errc::empty_set, "sweep_cut: empty subset");
  if (subset.size() == 1) return {subset, {}};

  std::vector<int> order = subset;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    double sa = scores.scores[a] / std::max(g.degrees[a], 1.0);
    double sb = scores.scores[b] / std::max(g.degrees[b], 1.0);
    if (sa != sb) return sa > sb;
    return a < b;
  });

  const int s = int(order.size());
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < s; ++i) pos[order[i]] = i;

  // Induced-subgraph volumes and the running cut across the sweep prefix.
  std::vector<double> ideg(s, 0.0);
  double total_vol = 0.0;
  for (int i = 0; i < s; ++i) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(g.adjacency, order[i]); it; ++it)
      if (pos[it.row()] >= 0) ideg[i] += it.value();
    total_vol += ideg[i];
  }

  double cut = 0.0, vol = 0.0;
  double best_cond = std::numeric_limits<double>::infinity();
  int best_prefix = 1;
  for (int i = 0; i + 1 < s; ++i) {
    double crossing = 0.0;
    for (Eigen::SparseMatrix<double>::InnerIterator it(g.adjacency, order[i]); it; ++it) {
      int p = pos[it.row()];
      if (p < 0) continue;
      crossing += (p < i) ? -it.value() : it.value();
    }
    cut += crossing;
    vol += ideg[i];
    double denom = std::min(vol, total_vol - vol);
    double cond = denom > 0.0 ? cut / denom
                              : (cut > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    if (cond < best_cond) {
      best_cond = cond;
      best_prefix = i + 1;
    }
  }
  std::vector<int> community(order.begin(), order.begin() + best_prefix);
  std::vector<int> rest(order.begin() + best_prefix, order.end());
  return {community, rest};
}

std::vector<std::vector<int>> community_split(const Graph& g, const std::vector<int>& subset,
                                              int c, std::uint64_t rng_seed) {
  if (subset.empty()) throw error(errc::empty_set, "community_split: empty subset");
  if (c < 1) throw error(errc::invalid_params, "community_split: need c >= 1");
  std::vector<std::vector<int>> groups{subset};
  std::uint64_t split_id = 0;
  while (int(groups.size()) < c) {
    // Largest group splits next; ties go to the earliest group.
    size_t target = 0;
    for (size_t i = 1; i < groups.size(); ++i)
      if (groups[i].size() > groups[target].size()) target = i;
    if (groups[target].size() <= 1) {
      groups.emplace_back();  // out of splittable mass; pad with empty groups
      continue;
    }
    const std::vector<int>& grp = groups[target];
    int hub = grp[0];
    for (int v : grp)
      if (g.degrees[v] > g.degrees[hub]) hub = v;
    long walks = 100L * long(subset.size());
    HkprScores scores =
        heat_kernel_pagerank(g, {hub}, 5.0, walks, Rng::split(rng_seed, split_id++).next_u64());
    auto [a, b] = sweep_cut(g, scores, grp);
    if (b.empty()) {  // degenerate sweep; peel one node to guarantee progress
      b.assign(a.begin() + 1, a.end());
      a.resize(1);
    }
    groups[target] = a;
    groups.insert(groups.begin() + target + 1, b);
  }
  return groups;
}

}  // namespace gsp
