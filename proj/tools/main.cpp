#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsp/error.hpp"
#include "gsp/experiments.hpp"
#include "gsp/graph.hpp"
#include "gsp/io.hpp"
#include "gsp/models.hpp"
#include "gsp/pipeline.hpp"
#include "gsp/poincare.hpp"
#include "gsp/sampling.hpp"
#include "gsp/spectral.hpp"
#include "gsp/threads.hpp"

namespace {

void emit(const std::optional<std::string>& out_path, const std::string& content) {
  if (out_path)
    gsp::write_file(*out_path, content);
  else
    std::cout << content;
}

gsp::NodeStrategy parse_strategy(const std::string& s) {
  if (s == "uniform") return gsp::NodeStrategy::uniform;
  if (s == "community") return gsp::NodeStrategy::community;
  throw CLI::ValidationError("--strategy", "expected uniform or community");
}

struct SampleArgs {
  std::string graph_path;
  int q = 20;
  int p = 10;
  int m = 200;
  std::string strategy = "uniform";
  int communities = 2;
  std::uint64_t seed = 0;
  bool no_sort = false;
  std::optional<int> n_override;
  std::optional<std::string> out;
  std::optional<std::string> intervals_out;
  std::optional<std::string> intervals_in;
};

void run_sample(const SampleArgs& a) {
  gsp::Graph g = gsp::read_edge_list(a.graph_path, a.n_override);
  std::vector<int> order(g.n);
  for (int i = 0; i < g.n; ++i) order[i] = i;
  gsp::Graph work = a.no_sort ? g : gsp::sort_by_degree(g, &order);

  gsp::IntervalSample iv;
  if (a.intervals_in) {
    iv = gsp::interval_sample_from_json(gsp::read_file(*a.intervals_in));
    if (iv.q != a.q)
      throw gsp::error(gsp::errc::invalid_params, "interval file was built with a different q");
  } else {
    iv = gsp::sample_intervals(gsp::coarsen(work, a.q), a.p);
  }
  gsp::SampleSet nodes =
      gsp::sample_nodes(work, iv, a.m, parse_strategy(a.strategy), a.communities, a.seed);
  for (int& idx : nodes.indices) idx = order[idx];
  nodes.method = "graphon";
  nodes.seed = a.seed;

  emit(a.out, gsp::sample_set_to_json(nodes));
  if (a.intervals_out) gsp::write_file(*a.intervals_out, gsp::interval_sample_to_json(iv));
}

struct VerifyArgs {
  std::string graph_path;
  std::string set_path;
  int band = 5;
  std::optional<int> n_override;
};

void run_verify(const VerifyArgs& a) {
  gsp::Graph g = gsp::read_edge_list(a.graph_path, a.n_override);
  gsp::SampleSet s = gsp::sample_set_from_json(gsp::read_file(a.set_path));
  for (int idx : s.indices)
    if (idx < 0 || idx >= g.n)
      throw gsp::error(gsp::errc::invalid_params, "sample index out of range");
  gsp::Spectrum spec = gsp::laplacian_spectrum(g, a.band);
  gsp::RankResult rr = gsp::uniqueness_rank(spec, s.indices, a.band);
  std::cout << "rank=" << rr.rank << " certified=" << (rr.certified ? "true" : "false")
            << "\n";
}

struct PoincareArgs {
  std::string graph_path;
  std::string set_path;
  int check_trials = 0;
  std::uint64_t seed = 0;
  std::optional<int> n_override;
  std::optional<std::string> out;
};

void run_poincare(const PoincareArgs& a) {
  gsp::Graph g = gsp::read_edge_list(a.graph_path, a.n_override);
  gsp::SampleSet s = gsp::sample_set_from_json(gsp::read_file(a.set_path));
  gsp::PoincareCertificate cert = gsp::poincare_constant(g, s.indices);
  if (a.check_trials > 0) gsp::verify_poincare(g, s.indices, a.check_trials, a.seed);
  emit(a.out, gsp::certificate_to_json(cert));
}

struct DifficultyArgs {
  std::string mixture_path;
  int grid = 64;
  std::optional<std::string> out;
};

void run_difficulty(const DifficultyArgs& a) {
  gsp::MixtureModel mm = gsp::mixture_from_json(gsp::read_file(a.mixture_path));
  gsp::DifficultyReport rep = gsp::difficulty(mm, a.grid);
  nlohmann::json j;
  j["s_max"] = rep.s_max;
  j["coupling"] = rep.coupling;
  j["gamma_min"] = rep.gamma_min;
  j["b_max"] = rep.b_max;
  j["phi"] = rep.phi;
  emit(a.out, j.dump() + "\n");
}

struct ExpArgs {
  gsp::ExperimentConfig cfg;
  std::string graph_path;
  std::string mixture_path;
  std::string strategy = "uniform";
  std::string n_grid_text;
  bool no_sort = false;
  std::optional<std::string> out;
};

void finish_config(ExpArgs& a) {
  if (!a.graph_path.empty()) a.cfg.graph_path = a.graph_path;
  if (!a.mixture_path.empty())
    a.cfg.mixture = gsp::mixture_from_json(gsp::read_file(a.mixture_path));
  a.cfg.strategy = parse_strategy(a.strategy);
  a.cfg.sort_nodes = !a.no_sort;
  if (!a.n_grid_text.empty()) {
    a.cfg.n_grid.clear();
    std::size_t pos = 0;
    while (pos < a.n_grid_text.size()) {
      std::size_t comma = a.n_grid_text.find(',', pos);
      if (comma == std::string::npos) comma = a.n_grid_text.size();
      int v = std::stoi(a.n_grid_text.substr(pos, comma - pos));
      if (v <= 0) throw gsp::error(gsp::errc::invalid_params, "n grid entries must be positive");
      a.cfg.n_grid.push_back(v);
      pos = comma + 1;
    }
  }
}

void add_common_exp_flags(CLI::App* cmd, ExpArgs& a) {
  cmd->add_option("--trials", a.cfg.trials, "Trial count")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a.cfg.seed, "Base seed");
  cmd->add_option("--format", a.cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", a.out, "Output path (stdout when omitted)");
}

}  // namespace

int main(int argc, char** argv) {
  gsp::apply_thread_cap();

  CLI::App app{"Graphon-based sampling set selection for bandlimited graph signals"};
  app.require_subcommand(1);

  SampleArgs sa;
  CLI::App* sample = app.add_subcommand("sample", "Select nodes via the graphon pipeline");
  sample->add_option("--graph", sa.graph_path, "Edge-list TSV")->required();
  sample->add_option("--q", sa.q, "Coarse interval count")->check(CLI::PositiveNumber);
  sample->add_option("--p", sa.p, "Intervals to select")->check(CLI::PositiveNumber);
  sample->add_option("--m", sa.m, "Node budget")->check(CLI::PositiveNumber);
  sample->add_option("--strategy", sa.strategy, "uniform | community")
      ->check(CLI::IsMember({"uniform", "community"}));
  sample->add_option("--c", sa.communities, "Communities per interval")
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", sa.seed, "Seed for the node draw");
  sample->add_option("--n", sa.n_override, "Node count override");
  sample->add_flag("--no-sort", sa.no_sort, "Skip the degree sort");
  sample->add_option("--out", sa.out, "SampleSet JSON path (stdout when omitted)");
  sample->add_option("--intervals-out", sa.intervals_out, "Also write the IntervalSample");
  sample->add_option("--intervals-in", sa.intervals_in, "Reuse a saved IntervalSample");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "Rank-certify a sample set");
  verify->add_option("--graph", va.graph_path, "Edge-list TSV")->required();
  verify->add_option("--set", va.set_path, "SampleSet JSON")->required();
  verify->add_option("--K", va.band, "Bandwidth (eigenvector count)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--n", va.n_override, "Node count override");

  PoincareArgs pa;
  CLI::App* poin = app.add_subcommand("poincare", "Poincare certificate for a support set");
  poin->add_option("--graph", pa.graph_path, "Edge-list TSV")->required();
  poin->add_option("--set", pa.set_path, "SampleSet JSON holding S")->required();
  poin->add_option("--check", pa.check_trials, "Random supported signals to test");
  poin->add_option("--seed", pa.seed, "Seed for the check");
  poin->add_option("--n", pa.n_override, "Node count override");
  poin->add_option("--out", pa.out, "Certificate JSON path (stdout when omitted)");

  DifficultyArgs da;
  CLI::App* diff = app.add_subcommand("difficulty", "Mixture separability statistics");
  diff->add_option("--mixture", da.mixture_path, "MixtureModel JSON")->required();
  diff->add_option("--grid", da.grid, "Brute-force grid resolution")
      ->check(CLI::PositiveNumber);
  diff->add_option("--out", da.out, "Report JSON path (stdout when omitted)");

  ExpArgs ra;
  CLI::App* rexp =
      app.add_subcommand("reconstruct-exp", "Reconstruction comparison vs random sampling");
  rexp->add_option("--graph", ra.graph_path, "Fixed edge-list TSV");
  rexp->add_option("--mixture", ra.mixture_path, "MixtureModel JSON generator");
  rexp->add_option("--n", ra.cfg.n, "Graph size for generated trials")
      ->check(CLI::PositiveNumber);
  rexp->add_option("--q", ra.cfg.q, "Coarse interval count")->check(CLI::PositiveNumber);
  rexp->add_option("--p", ra.cfg.p, "Intervals to select")->check(CLI::PositiveNumber);
  rexp->add_option("--m", ra.cfg.m, "Node budget")->check(CLI::PositiveNumber);
  rexp->add_option("--K", ra.cfg.band, "Signal bandwidth")->check(CLI::PositiveNumber);
  rexp->add_option("--strategy", ra.strategy, "uniform | community")
      ->check(CLI::IsMember({"uniform", "community"}));
  rexp->add_option("--c", ra.cfg.communities, "Communities per interval")
      ->check(CLI::PositiveNumber);
  rexp->add_flag("--no-sort", ra.no_sort, "Skip the degree sort on a fixed graph");
  rexp->add_flag("--timing", ra.cfg.timing, "Record wall times (breaks byte determinism)");
  add_common_exp_flags(rexp, ra);

  ExpArgs ca;
  CLI::App* cexp =
      app.add_subcommand("consistency-exp", "GE component-recovery sweep over graph sizes");
  cexp->add_option("--mixture", ca.mixture_path, "MixtureModel JSON")->required();
  cexp->add_option("--n-grid", ca.n_grid_text, "Comma-separated graph sizes")->required();
  cexp->add_flag("--noiseless", ca.cfg.noiseless, "Exact-weight blockmodel instead of draws");
  add_common_exp_flags(cexp, ca);

  try {
    app.parse(argc, argv);
    if (sample->parsed()) run_sample(sa);
    if (verify->parsed()) run_verify(va);
    if (poin->parsed()) run_poincare(pa);
    if (diff->parsed()) run_difficulty(da);
    if (rexp->parsed()) {
      finish_config(ra);
      emit(ra.out, gsp::run_reconstruction_experiment(ra.cfg));
    }
    if (cexp->parsed()) {
      finish_config(ca);
      emit(ca.out, gsp::run_consistency_experiment(ca.cfg));
    }
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const gsp::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
