#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "svrasym/dataset.hpp"

namespace svrasym {

enum class FitStatus { converged, infeasible, max_iters };

std::string_view to_string(FitStatus status);

struct SolverConfig {
  int max_iters = 100000;
  /// Relative duality gap, and for the hard problem also the absolute tube violation.
  double tol = 1e-8;
  /// Factor applied to the Lipschitz estimate when the backtracking test fails.
  double backtrack_growth = 2.0;
  /// The hard problem is declared infeasible once ||u|| > infeas_norm_factor * sqrt(n)
  /// and the dual objective rose over the last infeas_window iterations.
  double infeas_norm_factor = 1e6;
  int infeas_window = 100;
  /// Iterations between convergence checks (each costs one extra product with X).
  int check_every = 10;
  /// Keep the dual objective of every iteration in SvrFit::dual_trace.
  bool record_trace = false;
};

/// Throws std::invalid_argument on a non-positive tolerance, iteration budget or
/// window, a growth factor <= 1 or a non-finite norm factor.
void validate(const SolverConfig& cfg);

struct SvrFit {
  Eigen::VectorXd weights;  ///< w = X u / sqrt(p)
  Eigen::VectorXd dual;     ///< u
  FitStatus status = FitStatus::max_iters;
  int iterations = 0;
  /// Sup-norm of u - prox(u - grad), zero exactly at a dual optimum.
  double kkt_residual = 0.0;
  /// max_i (|y_i - w^T x_i| - eps)_+
  double constraint_violation = 0.0;
  /// |primal - dual| / max(1, |primal|)
  double duality_gap = 0.0;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  std::vector<double> dual_trace;
};

/// Hard SVR: min ||w||^2 / 2 s.t. |y_i - w^T x_i| <= eps, through its dual
///   max_u  y^T u / sqrt(p) - (eps / sqrt(p)) ||u||_1 - ||X u||^2 / (2p)
/// by accelerated proximal gradient with backtracking and function-value restart.
/// `features` is p x n with samples as columns.
SvrFit solve_hard_svr(const Eigen::MatrixXd& features, const Eigen::VectorXd& responses, double eps,
                      const SolverConfig& cfg = {});
SvrFit solve_hard_svr(const Dataset& data, double eps, const SolverConfig& cfg = {});

/// Soft SVR: min ||w||^2 / 2 + (C/p) sum_i (|y_i - w^T x_i| - eps)_+, same dual with the
/// box |u_i| <= C / sqrt(p).
SvrFit solve_soft_svr(const Eigen::MatrixXd& features, const Eigen::VectorXd& responses, double eps,
                      double cost, const SolverConfig& cfg = {});
SvrFit solve_soft_svr(const Dataset& data, double eps, double cost, const SolverConfig& cfg = {});

}  // namespace svrasym
