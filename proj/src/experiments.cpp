#include "gsp/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>

#include "json.hpp"

#include "gsp/error.hpp"
#include "gsp/io.hpp"
#include "gsp/rng.hpp"
#include "gsp/sampling.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

using nlohmann::json;

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point from) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
      .count();
}

std::vector<int> uniform_sample(int n, int m, Rng& rng) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < m; ++i) {
    size_t j = i + size_t(rng.next_below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  return pool;
}

std::string rows_to_csv(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  out << "# " << cfg.describe() << '\n';
  out << "trial,method,n,budget,certified,rel_error,ms\n";
  for (const ResultRow& r : rows)
    out << r.trial << ',' << r.method << ',' << r.n << ',' << r.budget << ','
        << (r.certified ? 1 : 0) << ',' << format_double(r.rel_error) << ','
        << format_double(r.ms) << '\n';
  return out.str();
}

std::string rows_to_json(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
  json j;
  j["config"] = cfg.describe();
  j["rows"] = json::array();
  for (const ResultRow& r : rows)
    j["rows"].push_back({{"trial", r.trial},
                         {"method", r.method},
                         {"n", r.n},
                         {"budget", r.budget},
                         {"certified", r.certified},
                         {"rel_error", r.rel_error},
                         {"ms", r.ms}});
  return j.dump() + "\n";
}

}  // namespace

std::string ExperimentConfig::describe() const {
  std::ostringstream out;
  out << "source=" << (graph_path ? *graph_path : std::string("mixture"))
      << " n=" << n << " q=" << q << " p=" << p << " m=" << m << " K=" << band
      << " strategy=" << (strategy == NodeStrategy::uniform ? "uniform" : "community")
      << " c=" << communities << " trials=" << trials << " seed=" << seed
      << " noiseless=" << (noiseless ? 1 : 0) << " timing=" << (timing ? 1 : 0);
  if (!n_grid.empty()) {
    out << " n_grid=";
    for (size_t i = 0; i < n_grid.size(); ++i) out << (i ? "," : "") << n_grid[i];
  }
  return out.str();
}

std::string run_reconstruction_experiment(const ExperimentConfig& cfg,
                                          std::vector<ResultRow>* rows_out) {
  if (!cfg.graph_path && !cfg.mixture)
    throw error(errc::invalid_params, "reconstruct-exp: need a graph or a mixture");
  if (cfg.band > cfg.m)
    throw error(errc::invalid_params, "reconstruct-exp: need K <= m");

  std::optional<Graph> fixed;
  std::optional<Spectrum> fixed_spec;
  if (cfg.graph_path) {
    Graph g = read_edge_list(*cfg.graph_path);
    fixed = cfg.sort_nodes ? sort_by_degree(g) : g;
    fixed_spec = laplacian_spectrum(*fixed);
  }
  StepGraphon graphon;
  if (cfg.mixture) graphon = mixture_to_graphon(*cfg.mixture);

  std::vector<ResultRow> rows(size_t(cfg.trials) * 2);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < cfg.trials; ++t) {
    try {
      Rng trial_rng = Rng::split(cfg.seed, std::uint64_t(t));
      const Graph* g = nullptr;
      const Spectrum* spec = nullptr;
      Graph drawn;
      Spectrum drawn_spec;
      if (fixed) {
        g = &*fixed;
        spec = &*fixed_spec;
      } else {
        drawn = sample_graph(graphon, cfg.n, trial_rng.next_u64(), true).graph;
        drawn_spec = laplacian_spectrum(drawn);
        g = &drawn;
        spec = &drawn_spec;
      }
      Signal x = synth_bandlimited(*spec, cfg.band, trial_rng.next_u64());

      auto evaluate = [&](const std::string& method, const std::vector<int>& nodes,
                          double ms) {
        ResultRow row;
        row.trial = t;
        row.method = method;
        row.n = g->n;
        row.budget = cfg.m;
        row.ms = cfg.timing ? ms : 0.0;
        RankResult rr = uniqueness_rank(*spec, nodes, cfg.band);
        row.certified = rr.certified;
        if (rr.certified) {
          SampleSet s;
          s.indices = nodes;
          s.method = method;
          s.budget = cfg.m;
          Eigen::VectorXd y(nodes.size());
          for (size_t i = 0; i < nodes.size(); ++i) y[i] = x[nodes[i]];
          Signal rec = reconstruct(*spec, cfg.band, s, y);
          row.rel_error = (rec - x).norm() / x.norm();
        } else {
          row.rel_error = std::numeric_limits<double>::quiet_NaN();
        }
        return row;
      };

      auto t0 = std::chrono::steady_clock::now();
      GraphonSampleResult gres = graphon_sample(*g, cfg.q, cfg.p, cfg.m, cfg.strategy,
                                                cfg.communities, trial_rng.next_u64());
      double graphon_ms = elapsed_ms(t0);

      Rng rand_rng(trial_rng.next_u64());
      t0 = std::chrono::steady_clock::now();
      std::vector<int> random_nodes = uniform_sample(g->n, std::min(cfg.m, g->n), rand_rng);
      double random_ms = elapsed_ms(t0);

      rows[size_t(t) * 2] = evaluate("graphon", gres.nodes.indices, graphon_ms);
      rows[size_t(t) * 2 + 1] = evaluate("random", random_nodes, random_ms);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.trial, a.method) < std::tie(b.trial, b.method);
  });
  if (rows_out) *rows_out = rows;
  return cfg.format == "json" ? rows_to_json(cfg, rows) : rows_to_csv(cfg, rows);
}

std::string run_consistency_experiment(const ExperimentConfig& cfg,
                                       std::vector<ConsistencyRow>* rows_out) {
  if (!cfg.mixture)
    throw error(errc::invalid_params, "consistency-exp: need a mixture model");
  if (cfg.n_grid.empty())
    throw error(errc::invalid_params, "consistency-exp: need an n grid");
  const MixtureModel& mm = *cfg.mixture;
  const int k = mm.K;
  StepGraphon graphon = mixture_to_graphon(mm);

  std::vector<ConsistencyRow> agg;
  for (size_t gi = 0; gi < cfg.n_grid.size(); ++gi) {
    const int n = cfg.n_grid[gi];
    if (n < k) throw error(errc::invalid_params, "consistency-exp: n below component count");
    std::vector<int> hit(cfg.trials, 0), cert(cfg.trials, 0);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < cfg.trials; ++t) {
      try {
        std::uint64_t gseed = Rng::split(cfg.seed, gi * 100000 + std::uint64_t(t)).next_u64();
        LatentGraph lg;
        if (cfg.noiseless) {
          // Exact-weight blockmodel with multinomial-free block sizes n*w_i.
          std::vector<int> sizes(k);
          int assigned = 0;
          for (int i = 0; i + 1 < k; ++i) {
            sizes[i] = int(std::lround(mm.weights[i] * n));
            assigned += sizes[i];
          }
          sizes[k - 1] = n - assigned;
          lg.graph = noiseless_blockmodel(mm.kernel, sizes);
          lg.components.clear();
          for (int b = 0; b < k; ++b)
            lg.components.insert(lg.components.end(), sizes[b], b);
        } else {
          lg = sample_graph(graphon, n, gseed, true);
        }
        Spectrum spec = laplacian_spectrum(lg.graph);
        SampleSet ge = ge_pivot_sample(spec.eigenvectors.leftCols(k));
        std::vector<int> labels;
        for (int idx : ge.indices) labels.push_back(lg.components[idx]);
        std::sort(labels.begin(), labels.end());
        bool distinct = std::unique(labels.begin(), labels.end()) == labels.end();
        hit[t] = distinct ? 1 : 0;
        cert[t] = uniqueness_rank(spec, ge.indices, k).certified ? 1 : 0;
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    ConsistencyRow row;
    row.n = n;
    row.trials = cfg.trials;
    row.components_hit_rate =
        double(std::accumulate(hit.begin(), hit.end(), 0)) / cfg.trials;
    row.certified_rate = double(std::accumulate(cert.begin(), cert.end(), 0)) / cfg.trials;
    agg.push_back(row);
  }
  if (rows_out) *rows_out = agg;

  if (cfg.format == "json") {
    json j;
    j["config"] = cfg.describe();
    j["rows"] = json::array();
    for (const ConsistencyRow& r : agg)
      j["rows"].push_back({{"n", r.n},
                           {"trials", r.trials},
                           {"components_hit_rate", r.components_hit_rate},
                           {"certified_rate", r.certified_rate}});
    return j.dump() + "\n";
  }
  std::ostringstream out;
  out << "# " << cfg.describe() << '\n';
  out << "n,trials,components_hit_rate,certified_rate\n";
  for (const ConsistencyRow& r : agg)
    out << r.n << ',' << r.trials << ',' << format_double(r.components_hit_rate) << ','
        << format_double(r.certified_rate) << '\n';
  return out.str();
}

}  // namespace gsp
