#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "svrasym/dataset.hpp"
#include "svrasym/noise.hpp"
#include "svrasym/quadrature.hpp"
#include "svrasym/solvers.hpp"

namespace svrasym {

enum class Estimator { hsvr, ssvr, ridge_oracle, null };
enum class SweptParameter { delta, eps, cost };

std::string_view to_string(Estimator e);
std::string_view to_string(SweptParameter s);
/// Throws std::invalid_argument on unknown names.
Estimator parse_estimator(std::string_view text);
SweptParameter parse_swept(std::string_view text);

struct SweepSpec {
  Estimator estimator = Estimator::hsvr;
  SweptParameter swept = SweptParameter::delta;
  std::vector<double> grid;
  // Values of the parameters that are not swept.
  double delta = 1.0;
  double sigma = 1.0;
  double beta = 1.0;
  double eps = 0.0;
  double cost = 1.0;
  NoiseModel noise = NoiseModel::gaussian();
  std::size_t p = 200;
  std::size_t trials = 20;
  std::uint64_t base_seed = 1;
  /// Also evaluate the asymptotic prediction (hsvr and ssvr; null is exact).
  bool theory = true;
  TruthDirection direction = TruthDirection::uniform_sphere;
  SolverConfig solver = [] {
    SolverConfig c;
    c.tol = 1e-6;
    return c;
  }();
  QuadratureSpec quad;
  /// Worker threads, 0 = hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
};

/// Throws std::invalid_argument when the grid is empty, not strictly increasing or
/// contains values invalid for the swept parameter, or when trials or p is zero.
void validate(const SweepSpec& spec);

struct TrialResult {
  bool feasible = true;
  double risk = 0.0;
  std::optional<double> cosine;
  std::optional<FitStatus> status;  ///< empty for closed-form estimators
};

struct SweepRow {
  double value = 0.0;
  std::optional<double> theory_risk;
  std::optional<double> theory_cosine;
  std::optional<double> mean_risk;
  std::optional<double> stderr_risk;  ///< sample sd / sqrt(trials_used); 0 for one trial
  std::optional<double> mean_cosine;
  double feasibility_rate = 0.0;
  std::size_t trials_used = 0;   ///< feasible trials entering the means
  std::size_t unconverged = 0;   ///< trials that hit the iteration budget
};

/// One finite-sample trial at grid point `grid_index`; its seed is
/// derive_seed(base_seed, {grid_index, trial_index}).
TrialResult run_trial(const SweepSpec& spec, std::size_t grid_index, std::size_t trial_index);

/// Asymptotic prediction at grid point `grid_index` (empty fields where none applies).
SweepRow theory_row(const SweepSpec& spec, std::size_t grid_index);

/// One row per grid point. Trials run concurrently; aggregation is in index order, so
/// output is identical for any thread count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

struct FeasibilityRow {
  double delta = 0.0;
  double rate = 0.0;
};

/// Fraction of hard-SVR fits not certified infeasible, per delta.
std::vector<FeasibilityRow> feasibility_curve(std::size_t p, double eps, double sigma,
                                              const NoiseModel& noise,
                                              const std::vector<double>& delta_grid,
                                              std::size_t trials, std::uint64_t base_seed,
                                              unsigned threads = 0,
                                              const SolverConfig& solver = SweepSpec{}.solver);

}  // namespace svrasym
