#include "doctest.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "gsp/error.hpp"
#include "gsp/local_cluster.hpp"
#include "helpers.hpp"

using namespace gsp;

TEST_CASE("t = 0 puts all mass uniformly on the seeds") {
  Graph g = testutil::random_graph(12, 0.3, 51);
  HkprScores hk = heat_kernel_pagerank(g, {2, 7}, 0.0, 4000, 9);
  CHECK(hk.scores.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hk.scores[2] == doctest::Approx(0.5).epsilon(0.05));
  CHECK(hk.scores[7] == doctest::Approx(0.5).epsilon(0.05));
  for (int i = 0; i < g.n; ++i)
    if (i != 2 && i != 7) CHECK(hk.scores[i] == 0.0);
}

TEST_CASE("mass never leaves the seed component") {
  Graph g = testutil::two_cliques(4);
  HkprScores hk = heat_kernel_pagerank(g, {1}, 3.0, 2000, 11);
  CHECK(hk.scores.sum() == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 4; i < 8; ++i) CHECK(hk.scores[i] == 0.0);
  CHECK_THROWS_AS(heat_kernel_pagerank(g, {}, 1.0, 10, 1), error);
}

TEST_CASE("parallel and serial walkers agree bitwise") {
  Graph g = testutil::random_graph(30, 0.2, 53);
  HkprScores par = heat_kernel_pagerank(g, {0, 4}, 2.5, 5000, 17);
  HkprScores ser = heat_kernel_pagerank_serial(g, {0, 4}, 2.5, 5000, 17);
  CHECK((par.scores - ser.scores).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("monte-carlo estimate matches the exact heat kernel on the 3-cycle") {
  Graph c3 = testutil::clique(3);
  // Dense series oracle: rho = e^{-t} sum_k t^k/k! (P^k e_0), P uniform walk.
  Eigen::MatrixXd p(3, 3);
  p << 0.0, 0.5, 0.5, 0.5, 0.0, 0.5, 0.5, 0.5, 0.0;
  Eigen::VectorXd dist = Eigen::VectorXd::Zero(3);
  Eigen::VectorXd term = Eigen::VectorXd::Zero(3);
  term[0] = 1.0;
  double t = 1.0, coeff = std::exp(-t);
  for (int k = 0; k < 60; ++k) {
    dist += coeff * term;
    term = p.transpose() * term;
    coeff *= t / (k + 1);
  }
  HkprScores hk = heat_kernel_pagerank(c3, {0}, t, 1000000, 23);
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(hk.scores[i] - dist[i]) <= 5e-3);
}

TEST_CASE("sweep_cut splits two disjoint cliques exactly") {
  Graph g = testutil::two_cliques(5);
  std::vector<int> subset(10);
  for (int i = 0; i < 10; ++i) subset[i] = i;
  HkprScores hk = heat_kernel_pagerank(g, {0}, 5.0, 5000, 29);
  auto [community, rest] = sweep_cut(g, hk, subset);
  std::sort(community.begin(), community.end());
  std::sort(rest.begin(), rest.end());
  CHECK(community == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(rest == std::vector<int>{5, 6, 7, 8, 9});
}

TEST_CASE("uniform scores on an even clique cut at half by the tie rule") {
  Graph g = testutil::clique(6);
  HkprScores hk;
  hk.scores = Eigen::VectorXd::Constant(6, 1.0 / 6.0);
  std::vector<int> subset = {0, 1, 2, 3, 4, 5};
  auto [community, rest] = sweep_cut(g, hk, subset);
  CHECK(community.size() == 3);
  CHECK(rest.size() == 3);
}

TEST_CASE("sweep_cut on a singleton returns it with an empty rest") {
  Graph g = testutil::path3();
  HkprScores hk;
  hk.scores = Eigen::VectorXd::Constant(3, 1.0 / 3.0);
  auto [community, rest] = sweep_cut(g, hk, {1});
  CHECK(community == std::vector<int>{1});
  CHECK(rest.empty());
}

TEST_CASE("sweep_cut returns the minimum-conductance prefix") {
  Graph g = testutil::random_graph(16, 0.3, 59);
  std::vector<int> subset(16);
  for (int i = 0; i < 16; ++i) subset[i] = i;
  HkprScores hk = heat_kernel_pagerank(g, {3}, 4.0, 3000, 31);
  auto [community, rest] = sweep_cut(g, hk, subset);

  // Independent conductance oracle over all sweep prefixes.
  std::vector<int> order = subset;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    double sa = hk.scores[a] / std::max(g.degrees[a], 1.0);
    double sb = hk.scores[b] / std::max(g.degrees[b], 1.0);
    if (sa != sb) return sa > sb;
    return a < b;
  });
  auto conductance = [&](size_t prefix) {
    double cut = 0.0, vol = 0.0, total = 0.0;
    std::vector<bool> in(g.n, false);
    for (size_t i = 0; i < prefix; ++i) in[order[i]] = true;
    for (int u = 0; u < g.n; ++u)
      for (int v = 0; v < g.n; ++v) {
        double w = g.weight(u, v);
        if (w == 0.0) continue;
        total += w;
        if (in[u]) vol += w;
        if (in[u] != in[v]) cut += w / 2.0;
      }
    double denom = std::min(vol, total - vol);
    return denom > 0 ? cut / denom : std::numeric_limits<double>::infinity();
  };
  double chosen = conductance(community.size());
  for (size_t prefix = 1; prefix < subset.size(); ++prefix)
    CHECK(chosen <= conductance(prefix) + 1e-12);
}

TEST_CASE("community_split covers the subset disjointly") {
  Graph g = testutil::two_cliques(4);
  std::vector<int> subset = {0, 1, 2, 3, 4, 5, 6, 7};

  auto whole = community_split(g, subset, 1, 3);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].size() == 8);

  auto pair = community_split(g, subset, 2, 3);
  REQUIRE(pair.size() == 2);
  std::vector<int> a = pair[0], b = pair[1];
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a[0] != 0) std::swap(a, b);
  CHECK(a == std::vector<int>{0, 1, 2, 3});
  CHECK(b == std::vector<int>{4, 5, 6, 7});

  auto singles = community_split(g, subset, 8, 3);
  REQUIRE(singles.size() == 8);
  size_t covered = 0;
  for (const auto& group : singles) {
    CHECK(group.size() <= 1);
    covered += group.size();
  }
  CHECK(covered == 8);

  CHECK_THROWS_AS(community_split(g, {}, 2, 1), error);
}

TEST_CASE("community_split pads with empty groups past the subset size") {
  Graph g = testutil::path3();
  auto groups = community_split(g, {0, 2}, 4, 5);
  REQUIRE(groups.size() == 4);
  size_t covered = 0;
  for (const auto& group : groups) covered += group.size();
  CHECK(covered == 2);
}
