#include "doctest.h"

#include <Eigen/Dense>
#include <algorithm>
#include <set>

#include "gsp/error.hpp"
#include "gsp/models.hpp"
#include "gsp/pipeline.hpp"
#include "gsp/sampling.hpp"
#include "gsp/spectral.hpp"
#include "helpers.hpp"

using namespace gsp;

TEST_CASE("coarsen with q = n returns A / n^2") {
  Graph g = testutil::random_graph(12, 0.4, 61);
  CoarseGraph cg = coarsen(g, g.n);
  Eigen::MatrixXd a = Eigen::MatrixXd(g.adjacency);
  CHECK((cg.weights - a / double(g.n * g.n)).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("coarsen with q = 1 integrates to total mass over n^2") {
  Graph g = testutil::random_graph(9, 0.5, 63);
  CoarseGraph cg = coarsen(g, 1);
  CHECK(cg.weights(0, 0) == doctest::Approx(g.degrees.sum() / 81.0).epsilon(1e-12));
  CHECK_THROWS_AS(coarsen(g, 0), error);
}

TEST_CASE("coarsen hand integral on the two-block clique pair") {
  Graph g = build_graph({{0, 1}, {2, 3}}, 4);
  CoarseGraph cg = coarsen(g, 2);
  CHECK(cg.weights(0, 0) == doctest::Approx(2.0 / 16.0).epsilon(1e-14));
  CHECK(cg.weights(1, 1) == doctest::Approx(2.0 / 16.0).epsilon(1e-14));
  CHECK(cg.weights(0, 1) == 0.0);
}

TEST_CASE("coarsen preserves mass for every q") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    Graph g = testutil::random_graph(23, 0.3, 200 + s);
    double mass = g.degrees.sum() / double(g.n) / double(g.n);
    for (int q = 1; q <= g.n; ++q) {
      CoarseGraph cg = coarsen(g, q);
      CHECK(cg.weights.sum() == doctest::Approx(mass).epsilon(1e-10));
      CHECK((cg.weights - cg.weights.transpose()).cwiseAbs().maxCoeff() <= 1e-15);
    }
  }
}

TEST_CASE("nested refinement is consistent") {
  // Coarsening to q and then to q' | q equals coarsening directly to q'.
  Graph g = testutil::random_graph(24, 0.25, 67);
  CoarseGraph direct = coarsen(g, 4);
  CoarseGraph fine = coarsen(g, 12);
  Eigen::MatrixXd folded = Eigen::MatrixXd::Zero(4, 4);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) folded(i / 3, j / 3) += fine.weights(i, j);
  CHECK((folded - direct.weights).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("parallel and serial coarsen agree bitwise") {
  Graph g = testutil::random_graph(150, 0.1, 69);
  CoarseGraph par = coarsen(g, 13);
  CoarseGraph ser = coarsen_serial(g, 13);
  CHECK((par.weights - ser.weights).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("sample_intervals takes one interval per disconnected block") {
  Graph g = testutil::two_cliques(4);
  CoarseGraph cg = coarsen(g, 2);
  IntervalSample iv = sample_intervals(cg, 2);
  REQUIRE(iv.interval_indices.size() == 2);
  std::set<int> got(iv.interval_indices.begin(), iv.interval_indices.end());
  CHECK(got == std::set<int>{0, 1});

  IntervalSample again = sample_intervals(cg, 2);
  CHECK(again.interval_indices == iv.interval_indices);
}

TEST_CASE("sample_intervals with p = q returns all intervals") {
  Graph g = testutil::random_graph(20, 0.3, 71);
  CoarseGraph cg = coarsen(g, 5);
  IntervalSample iv = sample_intervals(cg, 5);
  std::set<int> got(iv.interval_indices.begin(), iv.interval_indices.end());
  CHECK(got.size() == 5);
}

TEST_CASE("node_interval uses the left-endpoint rule") {
  CHECK(node_interval(0, 10, 4) == 0);
  CHECK(node_interval(2, 10, 4) == 0);   // cell [0.2,0.3) starts in interval 0
  CHECK(node_interval(3, 10, 4) == 1);   // cell [0.3,0.4) starts in interval 1
  CHECK(node_interval(9, 10, 4) == 3);
}

TEST_CASE("sample_nodes quota arithmetic") {
  Graph g = testutil::random_graph(40, 0.3, 73);
  IntervalSample iv;
  iv.q = 2;
  iv.p = 2;
  iv.interval_indices = {0, 1};
  // p=2, m=10: r = 10 from the first interval, 0 from the second.
  SampleSet s = sample_nodes(g, iv, 10, NodeStrategy::uniform, 2, 5);
  REQUIRE(s.indices.size() == 10);
  for (int idx : s.indices) CHECK(node_interval(idx, g.n, 2) == 0);
  CHECK(s.budget_met);

  IntervalSample bad;
  bad.q = 2;
  bad.p = 0;
  CHECK_THROWS_AS(sample_nodes(g, bad, 5, NodeStrategy::uniform, 2, 1), error);
}

TEST_CASE("shortfall redistributes to the other selected intervals") {
  // q=4 over n=12 puts 3 nodes per interval; quota 5 on the first interval
  // cannot be met so 2 spill into the second.
  Graph g = testutil::random_graph(12, 0.5, 79);
  IntervalSample iv;
  iv.q = 4;
  iv.p = 2;
  iv.interval_indices = {0, 2};
  SampleSet s = sample_nodes(g, iv, 6, NodeStrategy::uniform, 2, 7);
  REQUIRE(s.indices.size() == 6);
  int first = 0, third = 0;
  for (int idx : s.indices) {
    int interval = node_interval(idx, 12, 4);
    if (interval == 0) ++first;
    if (interval == 2) ++third;
  }
  CHECK(first == 3);
  CHECK(third == 3);
  CHECK(s.budget_met);
}

TEST_CASE("budget_met drops when supply runs out") {
  Graph g = testutil::random_graph(8, 0.5, 83);
  IntervalSample iv;
  iv.q = 4;
  iv.p = 2;
  iv.interval_indices = {1, 3};
  SampleSet s = sample_nodes(g, iv, 6, NodeStrategy::uniform, 2, 11);
  CHECK(s.indices.size() == 4);  // two intervals with two nodes each
  CHECK_FALSE(s.budget_met);
}

TEST_CASE("sample_nodes is reproducible and draws distinct in-interval nodes") {
  Graph g = testutil::random_graph(60, 0.2, 89);
  IntervalSample iv = sample_intervals(coarsen(g, 6), 3);
  for (auto strategy : {NodeStrategy::uniform, NodeStrategy::community}) {
    SampleSet a = sample_nodes(g, iv, 12, strategy, 2, 99);
    SampleSet b = sample_nodes(g, iv, 12, strategy, 2, 99);
    CHECK(a.indices == b.indices);
    std::set<int> uniq(a.indices.begin(), a.indices.end());
    CHECK(uniq.size() == a.indices.size());
    std::set<int> chosen(iv.interval_indices.begin(), iv.interval_indices.end());
    for (int idx : a.indices) CHECK(chosen.count(node_interval(idx, g.n, 6)) == 1);
  }
}

TEST_CASE("p = 1 draws the full budget from the single interval") {
  Graph g = testutil::random_graph(30, 0.3, 91);
  IntervalSample iv;
  iv.q = 3;
  iv.p = 1;
  iv.interval_indices = {1};
  SampleSet s = sample_nodes(g, iv, 7, NodeStrategy::uniform, 2, 13);
  REQUIRE(s.indices.size() == 7);
  for (int idx : s.indices) CHECK(node_interval(idx, 30, 3) == 1);
}

TEST_CASE("graphon_sample composes and exposes reusable intervals") {
  Eigen::MatrixXd b(2, 2);
  b << 0.9, 0.05, 0.05, 0.9;
  StepGraphon w = sbm_graphon(b, {0.5, 0.5});
  Graph g = sample_graph(w, 120, 17, true).graph;
  GraphonSampleResult res = graphon_sample(g, 6, 3, 18, NodeStrategy::uniform, 2, 7);
  CHECK(res.nodes.indices.size() == 18);
  CHECK(res.intervals.interval_indices.size() == 3);

  // Reuse on a larger graph from the same graphon: nodes stay inside the
  // stored intervals.
  Graph big = sample_graph(w, 240, 19, true).graph;
  SampleSet reused = sample_nodes(big, res.intervals, 18, NodeStrategy::uniform, 2, 7);
  std::set<int> chosen(res.intervals.interval_indices.begin(),
                       res.intervals.interval_indices.end());
  for (int idx : reused.indices) CHECK(chosen.count(node_interval(idx, 240, 6)) == 1);
}

TEST_CASE("pipeline output certifies on a well-separated blockmodel") {
  Eigen::MatrixXd b(2, 2);
  b << 0.9, 0.05, 0.05, 0.9;
  StepGraphon w = sbm_graphon(b, {0.5, 0.5});
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = sample_graph(w, 200, 300 + seed, true).graph;
    GraphonSampleResult res = graphon_sample(g, 10, 5, 40, NodeStrategy::uniform, 2, seed);
    Spectrum spec = laplacian_spectrum(g, 5);
    if (uniqueness_rank(spec, res.nodes.indices, 5).certified) ++hits;
  }
  CHECK(hits >= 19);
}
