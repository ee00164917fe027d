#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsp/graph.hpp"
#include "gsp/models.hpp"
#include "gsp/pipeline.hpp"

namespace gsp {

struct ExperimentConfig {
  std::optional<std::string> graph_path;
  std::optional<MixtureModel> mixture;
  int n = 500;
  std::vector<int> n_grid;
  int q = 20;
  int p = 10;
  int m = 200;
  int band = 5;
  int communities = 2;
  int trials = 100;
  NodeStrategy strategy = NodeStrategy::uniform;
  std::uint64_t seed = 0;
  bool timing = false;    // off by default so output bytes are reproducible
  bool noiseless = false;
  bool sort_nodes = true;
  std::string format = "csv";  // csv | json

  std::string describe() const;
};

struct ResultRow {
  int trial = 0;
  std::string method;
  int n = 0;
  int budget = 0;
  bool certified = false;
  double rel_error = 0.0;
  double ms = 0.0;
};

/// Bandlimited-signal recovery: graphon-pipeline sampling vs uniform-random
/// baseline at equal budget, per-trial reconstruction error and rank
/// certification. Returns the serialized result table.
std::string run_reconstruction_experiment(const ExperimentConfig& cfg,
                                          std::vector<ResultRow>* rows_out = nullptr);

struct ConsistencyRow {
  int n = 0;
  int trials = 0;
  double components_hit_rate = 0.0;  // GE picked one node per mixture component
  double certified_rate = 0.0;
};

/// GE pivot sampling on graphs drawn from a mixture across a size grid;
/// aggregates all-components-hit and certification rates per size.
std::string run_consistency_experiment(const ExperimentConfig& cfg,
                                       std::vector<ConsistencyRow>* rows_out = nullptr);

}  // namespace gsp
