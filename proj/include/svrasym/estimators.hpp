#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "svrasym/dataset.hpp"

namespace svrasym {

/// ||w - truth||^2. Throws std::invalid_argument on a size mismatch.
double prediction_risk(const Eigen::VectorXd& weights, const Eigen::VectorXd& truth);

/// w^T truth / (||w|| ||truth||), empty when either norm is zero.
std::optional<double> cosine_similarity(const Eigen::VectorXd& weights, const Eigen::VectorXd& truth);

/// Ridge fit of y = X^T w: argmin (1/n) ||y - X^T w||^2 + lambda ||w||^2,
/// i.e. w = (X X^T + n lambda I)^{-1} X y. Throws std::invalid_argument unless lambda > 0.
Eigen::VectorXd solve_ridge(const Eigen::MatrixXd& features, const Eigen::VectorXd& responses,
                            double lambda);
Eigen::VectorXd solve_ridge(const Dataset& data, double lambda);

/// 40 log-spaced values over [1e-4, 1e2].
std::vector<double> default_ridge_grid();

struct RidgeOracle {
  double lambda = 0.0;
  Eigen::VectorXd weights;
  double risk = 0.0;
};

/// Ridge with lambda chosen to minimize the true risk against data.truth (simulation only).
/// With `refine`, a second 21-point log grid spans the neighbours of the first argmin.
RidgeOracle oracle_ridge(const Dataset& data, std::span<const double> lambda_grid,
                         bool refine = true);
RidgeOracle oracle_ridge(const Dataset& data);

struct NoiseSignalEstimate {
  double sigma2 = 0.0;  ///< estimate of sigma^2 E N^2
  double beta2 = 0.0;   ///< estimate of ||beta*||^2
};

/// sigma2 = [y^T (I - X^T (X X^T)^{-1} X) y / n] / (1 - p/n), beta2 = y^T y / n - sigma2.
/// Throws UnsupportedRegimeError when n <= p or X X^T is singular.
NoiseSignalEstimate estimate_noise_signal(const Eigen::MatrixXd& features,
                                          const Eigen::VectorXd& responses);

}  // namespace svrasym
