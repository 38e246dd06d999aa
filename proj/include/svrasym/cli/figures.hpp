#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "svrasym/cli/csv.hpp"
#include "svrasym/quadrature.hpp"
#include "svrasym/solvers.hpp"

namespace svrasym::cli {

struct FigureOptions {
  std::size_t p = 200;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  /// Add finite-sample columns (where the figure has them).
  bool empirical = true;
  QuadratureSpec quad;
  SolverConfig solver = [] {
    SolverConfig c;
    c.tol = 1e-6;
    return c;
  }();
};

/// "1", "2", "3a", "3b", "4", "5a", "5b", "6", "7a", "7b".
const std::vector<std::string>& figure_ids();

/// Builds the table for one figure. Throws std::invalid_argument for an unknown id.
Table make_figure(const std::string& id, const FigureOptions& options);

/// Column label for a parameter value, e.g. label("risk_eps", 1.2) == "risk_eps1.2".
std::string label(const std::string& prefix, double value);

}  // namespace svrasym::cli
