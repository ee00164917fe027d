#include "gsp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gsp/error.hpp"

namespace gsp {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_error, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::io_error, "cannot write " + path);
  out << content;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Graph read_edge_list(const std::string& path, std::optional<int> n_override) {
  std::ifstream in(path);
  if (!in) throw error(errc::io_error, "cannot read " + path);
  std::vector<Edge> edges;
  int max_idx = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Edge e;
    if (!(ls >> e.u >> e.v)) throw error(errc::io_error, "malformed edge line: " + line);
    if (!(ls >> e.w)) e.w = 1.0;
    max_idx = std::max({max_idx, e.u, e.v});
    edges.push_back(e);
  }
  int n = n_override.value_or(max_idx + 1);
  if (n <= 0) throw error(errc::empty_graph, "edge list defines no nodes");
  return build_graph(edges, n);
}

void write_edge_list(const std::string& path, const Graph& g) {
  std::ostringstream out;
  for (int c = 0; c < g.adjacency.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(g.adjacency, c); it; ++it)
      if (it.row() < it.col())
        out << it.row() << '\t' << it.col() << '\t' << format_double(it.value()) << '\n';
  write_file(path, out.str());
}

std::string sample_set_to_json(const SampleSet& s) {
  json j;
  j["method"] = s.method;
  if (s.seed)
    j["seed"] = *s.seed;
  else
    j["seed"] = nullptr;
  j["budget"] = s.budget;
  j["indices"] = s.indices;
  if (!s.budget_met) j["budget_met"] = false;
  return j.dump() + "\n";
}

SampleSet sample_set_from_json(const std::string& text) {
  json j = json::parse(text);
  SampleSet s;
  s.method = j.at("method").get<std::string>();
  if (!j.at("seed").is_null()) s.seed = j.at("seed").get<std::uint64_t>();
  s.budget = j.at("budget").get<int>();
  s.indices = j.at("indices").get<std::vector<int>>();
  s.budget_met = j.value("budget_met", true);
  return s;
}

std::string interval_sample_to_json(const IntervalSample& iv) {
  json j;
  j["q"] = iv.q;
  j["p"] = iv.p;
  j["interval_indices"] = iv.interval_indices;
  return j.dump() + "\n";
}

IntervalSample interval_sample_from_json(const std::string& text) {
  json j = json::parse(text);
  IntervalSample iv;
  iv.q = j.at("q").get<int>();
  iv.p = j.at("p").get<int>();
  iv.interval_indices = j.at("interval_indices").get<std::vector<int>>();
  return iv;
}

std::string mixture_to_json(const MixtureModel& mm) {
  json j;
  j["K"] = mm.K;
  j["weights"] = mm.weights;
  json sup = json::array();
  for (const auto& [a, b] : mm.supports) sup.push_back({a, b});
  j["supports"] = sup;
  json ker = json::array();
  for (int r = 0; r < mm.kernel.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < mm.kernel.cols(); ++c) row.push_back(mm.kernel(r, c));
    ker.push_back(row);
  }
  j["kernel"] = ker;
  return j.dump() + "\n";
}

MixtureModel mixture_from_json(const std::string& text) {
  json j = json::parse(text);
  MixtureModel mm;
  mm.K = j.at("K").get<int>();
  mm.weights = j.at("weights").get<std::vector<double>>();
  for (const auto& pair : j.at("supports"))
    mm.supports.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  const auto& ker = j.at("kernel");
  mm.kernel.resize(mm.K, mm.K);
  for (int r = 0; r < mm.K; ++r)
    for (int c = 0; c < mm.K; ++c) mm.kernel(r, c) = ker.at(r).at(c).get<double>();
  mm.validate();
  return mm;
}

std::string certificate_to_json(const PoincareCertificate& cert) {
  json j;
  j["S"] = cert.s;
  j["neighborhood"] = cert.ns;
  j["lambda1"] = cert.lambda1;
  j["Lambda"] = cert.lambda_big;
  j["bandwidth"] = cert.bandwidth;
  return j.dump() + "\n";
}

std::string signal_to_csv(const Signal& x, const std::string& header) {
  std::ostringstream out;
  out << header << '\n';
  for (int i = 0; i < x.size(); ++i) out << format_double(x[i]) << '\n';
  return out.str();
}

Signal signal_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> vals;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {  // header
      first = false;
      continue;
    }
    if (line.empty()) continue;
    vals.push_back(std::stod(line));
  }
  Signal x(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) x[i] = vals[i];
  return x;
}

}  // namespace gsp
