#pragma once

#include <stdexcept>
#include <string>

namespace gsp {

enum class errc {
  invalid_edge,
  empty_graph,
  dimension_mismatch,
  not_symmetric,
  no_convergence,
  band_error,
  insufficient_spectrum,
  empty_set,
  rank_deficient,
  budget_error,
  invalid_partition,
  invalid_params,
  empty_seeds,
  needs_two_components,
  degenerate_component,
  not_disjoint,
  disconnected_set,
  degenerate_spectrum,
  theorem_violation,
  invalid_support,
  io_error,
};

/// Library-wide exception carrying a machine-checkable error code.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace gsp
