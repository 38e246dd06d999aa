#pragma once

#include <optional>

#include "svrasym/expectations.hpp"
#include "svrasym/noise.hpp"
#include "svrasym/quadrature.hpp"

namespace svrasym {

/// Limit problem of the hard SVR: n/p -> delta, ||beta*|| -> beta.
struct HsvrProblem {
  double delta = 1.0;
  double sigma = 1.0;
  double beta = 1.0;
  double eps = 0.0;
  NoiseModel noise = NoiseModel::gaussian();
};

/// Limit problem of the soft SVR with cost C.
struct SsvrProblem {
  double delta = 1.0;
  double sigma = 1.0;
  double beta = 1.0;
  double eps = 0.0;
  double cost = 1.0;
  NoiseModel noise = NoiseModel::gaussian();

  HsvrProblem hard() const { return {delta, sigma, beta, eps, noise}; }
};

/// Throws std::invalid_argument on non-positive delta/sigma/beta, negative eps or
/// non-positive cost.
void validate(const HsvrProblem& prob);
void validate(const SsvrProblem& prob);

struct SolverDiagnostics {
  int evaluations = 0;   ///< objective evaluations in the outer search
  double residual = 0.0; ///< |D(g1*, g2*)| for the hard problem, 0 otherwise
};

/// Below this denominator the cosine limit is reported as undefined.
inline constexpr double kCosineFloor = 1e-6;

struct AsymptoticSolution {
  double g1 = 0.0;
  double g2 = 0.0;
  /// sigma^2 (g1^2 + g2^2); NaN when infeasible.
  double risk = 0.0;
  std::optional<double> cosine;
  bool feasible = false;
  /// Maximizing chi of the soft problem. 0 when the supremum is only approached
  /// as chi -> 0; empty for the hard problem or when the objective does not
  /// depend on chi (g1 = 0).
  std::optional<double> chi;
  SolverDiagnostics diagnostics;
};

/// (b - g2) / sqrt(g1^2 + (g2 - b)^2) with b = beta / sigma, or empty below kCosineFloor.
std::optional<double> asymptotic_cosine(double g1, double g2, double beta_over_sigma);

/// Feasibility threshold: 1 / inf_{t >= 0} E(|G + t sigma N| - t eps)_+^2.
/// +infinity when the infimum is numerically zero.
double delta_star(double eps, double sigma, const NoiseModel& noise, const QuadratureSpec& quad = {});
double delta_star(double eps, double sigma, const HingeIntegrator& integrator);

/// Smallest eps with delta_star(eps, sigma) >= delta; 0 when delta <= 1.
double epsilon_star(double delta, double sigma, const NoiseModel& noise,
                    const QuadratureSpec& quad = {});
double epsilon_star(double delta, double sigma, const HingeIntegrator& integrator);

/// sqrt(delta) sqrt(E(|sqrt(g1^2 + g2^2) G + N| - eps/sigma)_+^2) - g1.
double d_value(double g1, double g2, const HsvrProblem& prob, const QuadratureSpec& quad = {});
double d_value(double g1, double g2, const HsvrProblem& prob, const HingeIntegrator& integrator);

/// Minimizes (g1^2 + (g2 - beta/sigma)^2) / 2 subject to d_value <= 0.
/// feasible = false (risk NaN) when delta >= delta_star.
AsymptoticSolution hsvr_risk(const HsvrProblem& prob, const QuadratureSpec& quad = {});
AsymptoticSolution hsvr_risk(const HsvrProblem& prob, const HingeIntegrator& integrator);

/// The soft-SVR saddle objective
///   (delta/sigma) E psi - g1 chi / (2 sigma) + g1^2/2 + (g2 - beta/sigma)^2/2,
/// psi being the two-branch integrand of soft_expectation. At g1 = 0 the chi terms
/// drop out and the expectation becomes C E(|g2 G + N| - eps/sigma)_+.
/// Throws std::domain_error when chi <= 0 or g1 < 0.
double dbar_value(double g1, double g2, double chi, const SsvrProblem& prob,
                  const QuadratureSpec& quad = {});
double dbar_value(double g1, double g2, double chi, const SsvrProblem& prob,
                  const HingeIntegrator& integrator);

struct SoftSupremum {
  double value = 0.0;
  /// Same convention as AsymptoticSolution::chi.
  std::optional<double> chi;
};

/// sup over chi > 0 of dbar_value(g1, g2, chi), for g1 >= 0.
SoftSupremum dbar_sup(double g1, double g2, const SsvrProblem& prob, const QuadratureSpec& quad = {});
SoftSupremum dbar_sup(double g1, double g2, const SsvrProblem& prob,
                      const HingeIntegrator& integrator);

/// min over (g1, g2) of dbar_sup. Always feasible. Throws ConvergenceError when
/// the g1 bracket cannot be closed.
AsymptoticSolution ssvr_risk(const SsvrProblem& prob, const QuadratureSpec& quad = {});
AsymptoticSolution ssvr_risk(const SsvrProblem& prob, const HingeIntegrator& integrator);

struct HsvrTuning {
  double eps = 0.0;
  double risk = 0.0;
  AsymptoticSolution solution;
  /// The risk was still decreasing at the largest eps tried (heavy tails can push
  /// the optimum to eps -> infinity, where the risk tends to beta^2).
  bool at_cap = false;
};

/// Risk-minimizing eps over the feasible range.
HsvrTuning tune_hsvr(double delta, double sigma, double beta, const NoiseModel& noise,
                     const QuadratureSpec& quad = {});
HsvrTuning tune_hsvr(double delta, double sigma, double beta, const HingeIntegrator& integrator);

struct SsvrTuning {
  double eps = 0.0;
  double cost = 0.0;
  double risk = 0.0;
  AsymptoticSolution solution;
};

/// Risk-minimizing (eps, C): coarse grid, then alternating scalar refinement.
SsvrTuning tune_ssvr(double delta, double sigma, double beta, const NoiseModel& noise,
                     const QuadratureSpec& quad = {});
SsvrTuning tune_ssvr(double delta, double sigma, double beta, const HingeIntegrator& integrator);

/// Limit risk of ridge regression at its optimal regularization, for isotropic Gaussian
/// features. Ridge is linear in y, so only sigma^2 E N^2 enters:
///   risk = gamma s^2 m(-lambda*),  gamma = 1/delta, s^2 = sigma^2 E N^2,
///   lambda* = gamma s^2 / beta^2,
/// with m the Stieltjes transform of the Marchenko-Pastur law of ratio gamma.
double ridge_optimal_risk(double delta, double sigma, double beta, const NoiseModel& noise);

}  // namespace svrasym
