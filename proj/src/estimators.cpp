#include "svrasym/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "svrasym/errors.hpp"

namespace svrasym {

namespace {

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> g(static_cast<std::size_t>(count));
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < count; ++i)
    g[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (count - 1));
  return g;
}

}  // namespace

double prediction_risk(const Eigen::VectorXd& weights, const Eigen::VectorXd& truth) {
  if (weights.size() != truth.size()) throw std::invalid_argument("dimension mismatch");
  return (weights - truth).squaredNorm();
}

std::optional<double> cosine_similarity(const Eigen::VectorXd& weights, const Eigen::VectorXd& truth) {
  if (weights.size() != truth.size()) throw std::invalid_argument("dimension mismatch");
  const double a = weights.norm(), b = truth.norm();
  if (!(a > 0.0) || !(b > 0.0)) return std::nullopt;
  return std::clamp(weights.dot(truth) / (a * b), -1.0, 1.0);
}

Eigen::VectorXd solve_ridge(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be positive");
  if (X.cols() != y.size()) throw std::invalid_argument("features and responses disagree on n");
  Eigen::MatrixXd A = X * X.transpose();
  A.diagonal().array() += static_cast<double>(X.cols()) * lambda;
  return A.llt().solve(X * y);
}

Eigen::VectorXd solve_ridge(const Dataset& data, double lambda) {
  return solve_ridge(data.features, data.responses, lambda);
}

std::vector<double> default_ridge_grid() { return log_grid(1e-4, 1e2, 40); }

RidgeOracle oracle_ridge(const Dataset& data, std::span<const double> grid, bool refine) {
  if (grid.empty()) throw std::invalid_argument("empty lambda grid");
  for (double l : grid)
    if (!(l > 0.0)) throw std::invalid_argument("lambda grid must be positive");
  // One eigendecomposition serves every lambda: w = V (Lambda + n lambda)^{-1} V^T X y.
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(data.features * data.features.transpose());
  const Eigen::VectorXd xy = eig.eigenvectors().transpose() * (data.features * data.responses);
  const Eigen::VectorXd vt = eig.eigenvectors().transpose() * data.truth;
  const double n = static_cast<double>(data.n());
  auto risk_of = [&](double lambda) {
    const Eigen::ArrayXd coef = xy.array() / (eig.eigenvalues().array() + n * lambda);
    return (coef - vt.array()).matrix().squaredNorm();
  };
  auto best_of = [&](std::span<const double> g) {
    std::size_t best = 0;
    double r = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double v = risk_of(g[i]);
      if (v < r) {
        r = v;
        best = i;
      }
    }
    return std::pair{best, r};
  };
  auto [idx, risk] = best_of(grid);
  double lambda = grid[idx];
  if (refine && grid.size() > 1) {
    const double lo = grid[idx == 0 ? 0 : idx - 1];
    const double hi = grid[std::min(idx + 1, grid.size() - 1)];
    if (hi > lo) {
      const auto fine = log_grid(lo, hi, 21);
      const auto [j, r2] = best_of(fine);
      if (r2 < risk) {
        risk = r2;
        lambda = fine[j];
      }
    }
  }
  RidgeOracle out;
  out.lambda = lambda;
  out.weights = solve_ridge(data, lambda);
  out.risk = prediction_risk(out.weights, data.truth);
  return out;
}

RidgeOracle oracle_ridge(const Dataset& data) {
  const auto grid = default_ridge_grid();
  return oracle_ridge(data, grid, true);
}

NoiseSignalEstimate estimate_noise_signal(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  if (X.cols() != y.size()) throw std::invalid_argument("features and responses disagree on n");
  const double n = static_cast<double>(X.cols());
  const double p = static_cast<double>(X.rows());
  if (!(n > p))
    throw UnsupportedRegimeError("noise estimation needs more samples than features (n > p)");
  const Eigen::LLT<Eigen::MatrixXd> llt(X * X.transpose());
  if (llt.info() != Eigen::Success) throw UnsupportedRegimeError("X X^T is singular");
  const Eigen::VectorXd fitted = X.transpose() * llt.solve(X * y);
  const double rss = (y - fitted).squaredNorm();
  NoiseSignalEstimate e;
  e.sigma2 = (rss / n) / (1.0 - p / n);
  e.beta2 = y.squaredNorm() / n - e.sigma2;
  return e;
}

}  // namespace svrasym
