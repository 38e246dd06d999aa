#include "svrasym/expectations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace svrasym {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

// Upper-tail probability of the precision variable kept out of the mixture rule.
constexpr double kPrecisionTail = 1e-18;

double normal_upper(double z) { return 0.5 * std::erfc(z * kInvSqrt2); }
double normal_density(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

// E min(B, kappa)^2 for B = (|X| - c)_+, X ~ N(0, v).
double gaussian_clipped_sq(double v, double c, double kappa) {
  const double sd = std::sqrt(v);
  if (kappa <= 0.25 * sd) {
    // = int_0^kappa 2 t P(B > t) dt; the integrand is smooth on the sd scale,
    // and the closed-form difference below cancels badly for small kappa.
    static const QuadratureRule rule = gauss_legendre_rule(12);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = 0.5 * kappa * (rule.nodes[i] + 1.0);
      acc += rule.weights[i] * 2.0 * t * 2.0 * normal_upper((c + t) / sd);
    }
    return 0.5 * kappa * acc;
  }
  const HingeMoments at_c = gaussian_hinge_moments(v, c);
  const HingeMoments at_ck = gaussian_hinge_moments(v, c + kappa);
  return at_c.second - at_ck.second - 2.0 * kappa * at_ck.first;
}

double gaussian_huber(double v, double c, double kappa) {
  const HingeMoments at_c = gaussian_hinge_moments(v, c);
  const HingeMoments at_ck = gaussian_hinge_moments(v, c + kappa);
  return 0.5 * (at_c.second - at_ck.second);
}

}  // namespace

HingeMoments gaussian_hinge_moments(double variance, double c) {
  if (variance <= 0.0) {
    return c < 0.0 ? HingeMoments{1.0, -c, c * c} : HingeMoments{};
  }
  const double sd = std::sqrt(variance);
  const double z = c / sd;
  const double upper = normal_upper(z);
  const double dens = normal_density(z);
  HingeMoments m;
  m.prob = 2.0 * upper;
  m.first = std::max(0.0, 2.0 * (sd * dens - c * upper));
  m.second = std::max(0.0, 2.0 * ((variance + c * c) * upper - c * sd * dens));
  return m;
}

HingeIntegrator::HingeIntegrator(const NoiseModel& noise, const QuadratureSpec& quad)
    : noise_(noise), quad_(quad) {
  validate(quad_);
  if (noise_.kind() == NoiseKind::standard_gaussian) {
    variances_ = {1.0};
    weights_ = {1.0};
    return;
  }
  // N = Z / sqrt(lambda), lambda ~ Gamma(d/2, rate d/2). Integrate over x = sqrt(lambda):
  // the density of x is 2 k x^(d-1) exp(-d x^2/2) and every hinge moment grows like
  // 1/x^2 as x -> 0, so the weight x^(d-3) is factored into a Gauss-Jacobi rule and
  // the remainder is smooth on [0, x_max].
  const double d = noise_.dof();
  const double half = 0.5 * d;
  const double lambda_max =
      boost::math::gamma_q_inv(half, kPrecisionTail) / half;
  const double x_max = std::sqrt(lambda_max);
  const double jac_beta = d - 3.0;
  const QuadratureRule rule = gauss_jacobi_rule(quad_.mixture_nodes, 0.0, jac_beta);
  const double log_k = half * std::log(half) - std::lgamma(half);
  const double scale = 0.5 * x_max;
  variances_.reserve(rule.nodes.size());
  weights_.reserve(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = scale * (1.0 + rule.nodes[i]);
    // (1+t)^(d-3) * scale^(d-3) = x^(d-3); remaining factor 2 k x^2 exp(-d x^2 / 2) * scale
    const double log_w = std::log(rule.weights[i]) + jac_beta * std::log(scale) +
                         std::log(2.0 * scale) + log_k + 2.0 * std::log(x) - half * x * x;
    variances_.push_back(1.0 / (x * x));
    weights_.push_back(std::exp(log_w));
  }
}

HingeMoments HingeIntegrator::hinge_scaled(double s, double a, double c) const {
  const double s2 = s * s;
  const double a2 = a * a;
  HingeMoments acc;
  for (std::size_t j = 0; j < variances_.size(); ++j) {
    const HingeMoments m = gaussian_hinge_moments(s2 + a2 * variances_[j], c);
    acc.prob += weights_[j] * m.prob;
    acc.first += weights_[j] * m.first;
    acc.second += weights_[j] * m.second;
  }
  return acc;
}

double HingeIntegrator::clipped_hinge_sq(double s, double c, double kappa) const {
  if (kappa <= 0.0) return 0.0;
  const double s2 = s * s;
  double acc = 0.0;
  for (std::size_t j = 0; j < variances_.size(); ++j)
    acc += weights_[j] * gaussian_clipped_sq(s2 + variances_[j], c, kappa);
  return acc;
}

double HingeIntegrator::huber_hinge(double s, double c, double kappa) const {
  if (kappa <= 0.0) return 0.0;
  const double s2 = s * s;
  double acc = 0.0;
  for (std::size_t j = 0; j < variances_.size(); ++j)
    acc += weights_[j] * gaussian_huber(s2 + variances_[j], c, kappa);
  return acc;
}

double e_hinge_sq(double s, double c, const NoiseModel& noise, const QuadratureSpec& quad) {
  return HingeIntegrator(noise, quad).hinge_sq(s, c);
}

double e_hinge(double s, double c, const NoiseModel& noise, const QuadratureSpec& quad) {
  return HingeIntegrator(noise, quad).hinge(s, c).first;
}

double soft_expectation(double g1, double g2, double chi, double cost, double thr,
                        const HingeIntegrator& integrator) {
  if (!(g1 > 0.0)) throw std::domain_error("soft_expectation: g1 must be positive");
  if (!(chi > 0.0)) throw std::domain_error("soft_expectation: chi must be positive");
  if (!(cost > 0.0)) throw std::domain_error("soft_expectation: cost must be positive");
  // With kappa = g1 cost / chi the integrand is (cost / kappa) h_kappa(B).
  const double kappa = g1 * cost / chi;
  const double s = std::hypot(g1, g2);
  return cost / kappa * integrator.huber_hinge(s, thr, kappa);
}

double soft_expectation(double g1, double g2, double chi, double cost, double thr,
                        const NoiseModel& noise, const QuadratureSpec& quad) {
  return soft_expectation(g1, g2, chi, cost, thr, HingeIntegrator(noise, quad));
}

double tensor_expectation(double s, const NoiseModel& noise, const QuadratureSpec& quad,
                          const std::function<double(double)>& integrand,
                          std::span<const double> kinks) {
  validate(quad);
  static thread_local boost::math::quadrature::exp_sinh<double> tail_rule;
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double rel_tol = 1e-13;

  const auto weighted = [&](double shift) {
    return [&, shift](double n) { return integrand(shift + n) * noise.pdf(n); };
  };

  const auto line_integral = [&](double shift) {
    std::vector<double> breaks;
    if (quad.split_kinks) {
      for (double k : kinks) {
        breaks.push_back(k - shift);
        breaks.push_back(-k - shift);
      }
    }
    breaks.push_back(0.0);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    const auto f = weighted(shift);
    double total = tail_rule.integrate([&](double t) { return f(breaks.back() + t); }, rel_tol);
    total += tail_rule.integrate([&](double t) { return f(breaks.front() - t); }, rel_tol);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      if (breaks[i + 1] > breaks[i])
        total += Kronrod::integrate(f, breaks[i], breaks[i + 1], 15, rel_tol);
    }
    return total;
  };

  if (s == 0.0) return line_integral(0.0);
  const QuadratureRule gh = gauss_hermite_rule(quad.gauss_nodes_G);
  double acc = 0.0;
  for (std::size_t k = 0; k < gh.nodes.size(); ++k) acc += gh.weights[k] * line_integral(s * gh.nodes[k]);
  return acc;
}

double e_hinge_sq_tensor(double s, double c, const NoiseModel& noise, const QuadratureSpec& quad) {
  const double kinks[] = {c};
  return tensor_expectation(
      s, noise, quad,
      [c](double x) {
        const double b = std::max(std::abs(x) - c, 0.0);
        return b * b;
      },
      kinks);
}

double soft_expectation_tensor(double g1, double g2, double chi, double cost, double thr,
                               const NoiseModel& noise, const QuadratureSpec& quad) {
  if (!(g1 > 0.0) || !(chi > 0.0) || !(cost > 0.0))
    throw std::domain_error("soft_expectation_tensor: g1, chi and cost must be positive");
  const double kink = thr + g1 * cost / chi;
  const double kinks[] = {thr, kink};
  return tensor_expectation(
      std::hypot(g1, g2), noise, quad,
      [=](double x) {
        const double b = std::max(std::abs(x) - thr, 0.0);
        if (b * chi > g1 * cost) return cost * (b - cost * g1 / (2.0 * chi));
        return chi * b * b / (2.0 * g1);
      },
      kinks);
}

double lemma_max_value(std::span<const double> a, double m, double eps) {
  if (!(m > 0.0)) throw std::domain_error("lemma_max_value: m must be positive");
  double acc = 0.0;
  for (double ai : a) {
    const double h = std::max(std::abs(ai) - eps, 0.0);
    acc += h * h;
  }
  return m * std::sqrt(acc);
}

double boxed_max_chi_objective(std::span<const double> b, double beta, double tau, double chi) {
  if (!(chi > 0.0)) throw std::domain_error("boxed_max_chi_objective: chi must be positive");
  double acc = -beta * chi / 2.0;
  for (double bi : b) {
    if (bi * chi / beta <= tau)
      acc += bi * bi * chi / (2.0 * beta);
    else
      acc += bi * tau - beta * tau * tau / (2.0 * chi);
  }
  return acc;
}

double boxed_max_value(std::span<const double> b, double beta, double tau) {
  if (!(tau > 0.0)) throw std::domain_error("boxed_max_value: tau must be positive");
  if (beta < 0.0) throw std::domain_error("boxed_max_value: beta must be nonnegative");
  if (beta == 0.0) return tau * std::accumulate(b.begin(), b.end(), 0.0);
  // The chi-derivative is (sum_i min(b_i, kappa)^2 - beta^2) / (2 beta) with
  // kappa = beta tau / chi, so the supremum sits where sum min(b_i, kappa)^2 = beta^2,
  // or at chi -> 0 (value 0) when ||b|| <= beta.
  std::vector<double> sorted(b.begin(), b.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const double total = std::inner_product(sorted.begin(), sorted.end(), sorted.begin(), 0.0);
  if (total <= beta * beta) return 0.0;
  // Find k = number of clipped entries: kappa in [b_(k), b_(k-1)].
  double tail = total;
  double kappa = 0.0;
  for (std::size_t k = 1; k <= sorted.size(); ++k) {
    tail -= sorted[k - 1] * sorted[k - 1];
    const double candidate = std::sqrt(std::max(beta * beta - tail, 0.0) / static_cast<double>(k));
    const double lower = k < sorted.size() ? sorted[k] : 0.0;
    if (candidate >= lower && candidate <= sorted[k - 1]) {
      kappa = candidate;
      break;
    }
  }
  return boxed_max_chi_objective(b, beta, tau, beta * tau / kappa);
}

}  // namespace svrasym
