#pragma once

#include <functional>
#include <span>
#include <vector>

#include "svrasym/noise.hpp"
#include "svrasym/quadrature.hpp"

namespace svrasym {

/// Moments of the hinge B = (|X| - c)_+ for X = s*G + N.
struct HingeMoments {
  double prob = 0.0;    ///< P(|X| > c)
  double first = 0.0;   ///< E B
  double second = 0.0;  ///< E B^2
};

/// Closed-form hinge moments for X ~ N(0, variance).
HingeMoments gaussian_hinge_moments(double variance, double c);

/// Evaluates expectations over X = s*G + N, G ~ N(0,1) independent of N.
///
/// Every admissible N is a mixture of centred normals (the Gaussian model is a
/// single component; the scale mixture integrates over its precision), so X is
/// too and each expectation reduces to closed-form Gaussian pieces summed over a
/// fixed mixture rule. Build once per noise model and reuse.
class HingeIntegrator {
 public:
  explicit HingeIntegrator(const NoiseModel& noise, const QuadratureSpec& quad = {});

  const NoiseModel& noise() const noexcept { return noise_; }
  const QuadratureSpec& quadrature() const noexcept { return quad_; }

  /// Variances and weights of the mixture representing N.
  std::span<const double> component_variances() const noexcept { return variances_; }
  std::span<const double> component_weights() const noexcept { return weights_; }

  HingeMoments hinge(double s, double c) const { return hinge_scaled(s, 1.0, c); }
  /// Moments of (|sG + aN| - c)_+.
  HingeMoments hinge_scaled(double s, double a, double c) const;
  /// E (|sG + N| - c)_+^2
  double hinge_sq(double s, double c) const { return hinge(s, c).second; }
  /// E min(B, kappa)^2 with B = (|sG + N| - c)_+
  double clipped_hinge_sq(double s, double c, double kappa) const;
  /// E h_kappa(B) with the Huber function h_kappa(b) = b^2/2 (b <= kappa), kappa*b - kappa^2/2.
  double huber_hinge(double s, double c, double kappa) const;

 private:
  NoiseModel noise_;
  QuadratureSpec quad_;
  std::vector<double> variances_;
  std::vector<double> weights_;
};

/// E (|s G + N| - c)_+^2 for s, c >= 0.
double e_hinge_sq(double s, double c, const NoiseModel& noise, const QuadratureSpec& quad = {});

/// E (|s G + N| - c)_+ for s, c >= 0.
double e_hinge(double s, double c, const NoiseModel& noise, const QuadratureSpec& quad = {});

/// The expectation inside the soft-SVR scalar objective: with
/// B = (|sqrt(g1^2 + g2^2) G + N| - thr)_+,
///   E[ cost (B - cost g1 / (2 chi)) 1{B chi > g1 cost} + chi B^2 / (2 g1) 1{B chi <= g1 cost} ].
/// Throws std::domain_error unless g1 > 0, chi > 0 and cost > 0.
double soft_expectation(double g1, double g2, double chi, double cost, double thr,
                        const NoiseModel& noise, const QuadratureSpec& quad = {});
double soft_expectation(double g1, double g2, double chi, double cost, double thr,
                        const HingeIntegrator& integrator);

/// Independent two-dimensional route: Gauss-Hermite over G, adaptive integration of
/// the noise density over N split at the integrand's kinks. `kinks` are the values of
/// |x| where `integrand(x)` is not smooth. Slow; used to cross-check the mixture route.
double tensor_expectation(double s, const NoiseModel& noise, const QuadratureSpec& quad,
                          const std::function<double(double)>& integrand,
                          std::span<const double> kinks);

double e_hinge_sq_tensor(double s, double c, const NoiseModel& noise,
                         const QuadratureSpec& quad = {});
double soft_expectation_tensor(double g1, double g2, double chi, double cost, double thr,
                               const NoiseModel& noise, const QuadratureSpec& quad = {});

/// m * ||(|a| - eps)_+||_2: the max over ||u||_2 = m of u^T a - eps ||u||_1 when some
/// |a_i| > eps, and in every case the max over the ball ||u||_2 <= m.
double lemma_max_value(std::span<const double> a, double m, double eps);

/// The concave chi-function whose supremum gives boxed_max_value:
///   sum_i [ b_i^2 chi/(2 beta) 1{b_i chi/beta <= tau} + (b_i tau - beta tau^2/(2 chi)) 1{b_i chi/beta > tau} ] - beta chi/2.
double boxed_max_chi_objective(std::span<const double> b, double beta, double tau, double chi);

/// max over |u_i| <= tau of sum_i b_i |u_i| - beta ||u||_2 for b >= 0, evaluated
/// through the supremum over chi > 0 of boxed_max_chi_objective (beta > 0) or
/// tau * sum b (beta = 0).
double boxed_max_value(std::span<const double> b, double beta, double tau);

}  // namespace svrasym
