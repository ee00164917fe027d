#pragma once

#include <optional>
#include <string>

#include "gsp/graph.hpp"
#include "gsp/models.hpp"
#include "gsp/pipeline.hpp"
#include "gsp/poincare.hpp"
#include "gsp/sampling.hpp"

namespace gsp {

/// Edge list: one `u<TAB>v` or `u<TAB>v<TAB>w` per line, 0-based, `#`
/// comments ignored. Node count defaults to 1 + max index.
Graph read_edge_list(const std::string& path, std::optional<int> n_override = std::nullopt);
void write_edge_list(const std::string& path, const Graph& g);

std::string sample_set_to_json(const SampleSet& s);
SampleSet sample_set_from_json(const std::string& text);

std::string interval_sample_to_json(const IntervalSample& iv);
IntervalSample interval_sample_from_json(const std::string& text);

std::string mixture_to_json(const MixtureModel& mm);
MixtureModel mixture_from_json(const std::string& text);

std::string certificate_to_json(const PoincareCertificate& cert);

/// Single-column CSV with a one-line header.
std::string signal_to_csv(const Signal& x, const std::string& header = "value");
Signal signal_from_csv(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Shortest decimal form that round-trips a double; used everywhere output
/// bytes must be reproducible.
std::string format_double(double v);

}  // namespace gsp
