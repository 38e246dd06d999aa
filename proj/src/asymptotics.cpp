#include "svrasym/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "svrasym/detail/scalar_search.hpp"
#include "svrasym/errors.hpp"

namespace svrasym {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBracketCap = 1e6;

void require_noise(const NoiseModel& problem_noise, const HingeIntegrator& integrator) {
  if (!(problem_noise == integrator.noise()))
    throw std::invalid_argument("integrator was built for a different noise model");
}

// Smallest zero of g1 -> D(g1, g2) on g1 >= 0, or empty when D > 0 everywhere.
// D is convex in g1 with D(0) >= 0.
struct LowerRoot {
  std::optional<double> root;
  int evaluations = 0;
};

LowerRoot lower_root(double g2, double delta, double thr, const HingeIntegrator& integ) {
  LowerRoot out;
  const double sqrt_delta = std::sqrt(delta);
  auto D = [&](double g1) {
    ++out.evaluations;
    return sqrt_delta * std::sqrt(integ.hinge_sq(std::hypot(g1, g2), thr)) - g1;
  };
  const double d0 = D(0.0);
  if (d0 <= 0.0) {
    out.root = 0.0;
    return out;
  }
  double neg = kNaN;
  double prev = D(0.5);
  if (prev < 0.0) neg = 0.5;
  for (double hi = 1.0; std::isnan(neg) && hi <= kBracketCap; hi *= 2.0) {
    const double v = D(hi);
    if (v < 0.0) {
      neg = hi;
      break;
    }
    if (v >= prev) {
      // Past the minimum of a convex function: the negative set, if any, is inside [0, hi].
      const auto m = detail::minimize_on(D, 0.0, hi, 52);
      if (m.value < 0.0) neg = m.x;
      break;
    }
    prev = v;
  }
  if (std::isnan(neg)) return out;
  out.root = detail::root_on(D, 0.0, neg, d0, D(neg), 52);
  return out;
}

double hinge_first(double s, double thr, const HingeIntegrator& integ) {
  return integ.hinge(s, thr).first;
}

}  // namespace

void validate(const HsvrProblem& prob) {
  if (!(prob.delta > 0.0) || !std::isfinite(prob.delta))
    throw std::invalid_argument("delta must be positive and finite");
  if (!(prob.sigma > 0.0) || !std::isfinite(prob.sigma))
    throw std::invalid_argument("sigma must be positive and finite");
  if (!(prob.beta > 0.0) || !std::isfinite(prob.beta))
    throw std::invalid_argument("beta must be positive and finite");
  if (!(prob.eps >= 0.0) || !std::isfinite(prob.eps))
    throw std::invalid_argument("eps must be nonnegative and finite");
}

void validate(const SsvrProblem& prob) {
  validate(prob.hard());
  if (!(prob.cost > 0.0) || !std::isfinite(prob.cost))
    throw std::invalid_argument("cost must be positive and finite");
}

std::optional<double> asymptotic_cosine(double g1, double g2, double beta_over_sigma) {
  const double den = std::hypot(g1, g2 - beta_over_sigma);
  if (!(den >= kCosineFloor)) return std::nullopt;
  return (beta_over_sigma - g2) / den;
}

// ---------------------------------------------------------------- threshold

double delta_star(double eps, double sigma, const NoiseModel& noise, const QuadratureSpec& quad) {
  return delta_star(eps, sigma, HingeIntegrator(noise, quad));
}

double delta_star(double eps, double sigma, const HingeIntegrator& integ) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be nonnegative");
  // With u = t sigma the map depends on eps/sigma only.
  const double c = eps / sigma;
  auto f = [&](double u) { return integ.hinge_scaled(1.0, u, u * c).second; };
  const double f0 = 1.0;
  double hi = 1.0;
  double prev = f(0.5);
  bool closed = false;
  while (hi <= 1e12) {
    const double v = f(hi);
    if (v >= prev) {
      closed = true;
      break;
    }
    prev = v;
    hi *= 2.0;
  }
  if (!closed) return kInf;  // still decreasing at the cap
  const double best = std::min(f0, detail::minimize_on(f, 0.0, hi, 52).value);
  if (!(best > 1e-300)) return kInf;
  return 1.0 / best;
}

double epsilon_star(double delta, double sigma, const NoiseModel& noise, const QuadratureSpec& quad) {
  return epsilon_star(delta, sigma, HingeIntegrator(noise, quad));
}

double epsilon_star(double delta, double sigma, const HingeIntegrator& integ) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  if (!(delta > 1.0)) return 0.0;
  auto g = [&](double eps) {
    const double ds = delta_star(eps, sigma, integ);
    return std::isinf(ds) ? 1.0 : std::log(ds / delta);
  };
  double lo = 0.0;
  double glo = g(lo);
  double hi = sigma;
  double ghi = g(hi);
  while (ghi < 0.0) {
    lo = hi;
    glo = ghi;
    hi *= 2.0;
    ghi = g(hi);
  }
  return detail::root_on(g, lo, hi, glo, ghi, 50);
}

// ---------------------------------------------------------------- hard SVR

double d_value(double g1, double g2, const HsvrProblem& prob, const QuadratureSpec& quad) {
  return d_value(g1, g2, prob, HingeIntegrator(prob.noise, quad));
}

double d_value(double g1, double g2, const HsvrProblem& prob, const HingeIntegrator& integ) {
  require_noise(prob.noise, integ);
  return std::sqrt(prob.delta) *
             std::sqrt(integ.hinge_sq(std::hypot(g1, g2), prob.eps / prob.sigma)) -
         g1;
}

AsymptoticSolution hsvr_risk(const HsvrProblem& prob, const QuadratureSpec& quad) {
  return hsvr_risk(prob, HingeIntegrator(prob.noise, quad));
}

AsymptoticSolution hsvr_risk(const HsvrProblem& prob, const HingeIntegrator& integ) {
  validate(prob);
  require_noise(prob.noise, integ);
  AsymptoticSolution sol;
  sol.risk = kNaN;
  if (prob.delta >= delta_star(prob.eps, prob.sigma, integ)) return sol;

  const double b = prob.beta / prob.sigma;
  const double thr = prob.eps / prob.sigma;
  int evals = 0;
  auto L = [&](double g2) {
    const LowerRoot r = lower_root(g2, prob.delta, thr, integ);
    evals += r.evaluations;
    return r.root;
  };

  // The feasible g2 range is an interval around 0 (D is even and jointly convex).
  double g2_max = b;
  if (!L(b)) {
    if (!L(0.0)) return sol;  // numerically at the threshold
    double lo = 0.0, hi = b;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * b; ++it) {
      const double mid = 0.5 * (lo + hi);
      (L(mid) ? lo : hi) = mid;
    }
    g2_max = lo;
  }

  auto phi = [&](double g2) {
    const double l = L(g2).value_or(kBracketCap);
    return 0.5 * l * l + 0.5 * (g2 - b) * (g2 - b);
  };
  const auto m = detail::minimize_on(phi, 0.0, g2_max, 52);
  const auto g1 = L(m.x);
  if (!g1) throw ConvergenceError("hard-SVR optimum left the feasible set", kNaN, m.x);

  sol.feasible = true;
  sol.g1 = *g1;
  sol.g2 = m.x;
  sol.risk = prob.sigma * prob.sigma * (sol.g1 * sol.g1 + sol.g2 * sol.g2);
  sol.cosine = asymptotic_cosine(sol.g1, sol.g2, b);
  sol.diagnostics.evaluations = evals;
  sol.diagnostics.residual = std::abs(d_value(sol.g1, sol.g2, prob, integ));
  return sol;
}

// ---------------------------------------------------------------- soft SVR

double dbar_value(double g1, double g2, double chi, const SsvrProblem& prob,
                  const QuadratureSpec& quad) {
  return dbar_value(g1, g2, chi, prob, HingeIntegrator(prob.noise, quad));
}

double dbar_value(double g1, double g2, double chi, const SsvrProblem& prob,
                  const HingeIntegrator& integ) {
  require_noise(prob.noise, integ);
  if (!(chi > 0.0)) throw std::domain_error("chi must be positive");
  if (!(g1 >= 0.0)) throw std::domain_error("g1 must be nonnegative");
  const double b = prob.beta / prob.sigma;
  const double thr = prob.eps / prob.sigma;
  const double quad_part = 0.5 * g1 * g1 + 0.5 * (g2 - b) * (g2 - b);
  if (g1 == 0.0)
    return quad_part +
           prob.cost * prob.delta / prob.sigma * hinge_first(std::abs(g2), thr, integ);
  const double e = soft_expectation(g1, g2, chi, prob.cost, thr, integ);
  return quad_part + prob.delta / prob.sigma * e - g1 * chi / (2.0 * prob.sigma);
}

SoftSupremum dbar_sup(double g1, double g2, const SsvrProblem& prob, const QuadratureSpec& quad) {
  return dbar_sup(g1, g2, prob, HingeIntegrator(prob.noise, quad));
}

SoftSupremum dbar_sup(double g1, double g2, const SsvrProblem& prob, const HingeIntegrator& integ) {
  require_noise(prob.noise, integ);
  if (!(g1 >= 0.0)) throw std::domain_error("g1 must be nonnegative");
  const double b = prob.beta / prob.sigma;
  const double thr = prob.eps / prob.sigma;
  const double s = std::hypot(g1, g2);
  const double quad_part = 0.5 * g1 * g1 + 0.5 * (g2 - b) * (g2 - b);
  SoftSupremum out;
  if (g1 == 0.0) {
    out.value = quad_part + prob.cost * prob.delta / prob.sigma * hinge_first(s, thr, integ);
    return out;
  }
  // In kappa = g1 C / chi the objective is quad + (C / (sigma kappa)) [delta E h_kappa(B) - g1^2/2]
  // whose stationarity condition delta E min(B, kappa)^2 = g1^2 is monotone in kappa.
  const double g1sq = g1 * g1;
  if (prob.delta * integ.hinge_sq(s, thr) <= g1sq) {
    out.value = quad_part;
    out.chi = 0.0;
    return out;
  }
  auto f = [&](double kappa) { return prob.delta * integ.clipped_hinge_sq(s, thr, kappa) - g1sq; };
  double lo = 0.0, flo = -g1sq;
  double hi = std::max(g1, 1e-3);
  double fhi = f(hi);
  while (fhi < 0.0) {
    lo = hi;
    flo = fhi;
    hi *= 2.0;
    fhi = f(hi);
  }
  const double kappa = detail::root_on(f, lo, hi, flo, fhi, 52);
  const double inner = prob.delta * integ.huber_hinge(s, thr, kappa) - 0.5 * g1sq;
  out.value = quad_part + prob.cost / (prob.sigma * kappa) * inner;
  out.chi = g1 * prob.cost / kappa;
  return out;
}

AsymptoticSolution ssvr_risk(const SsvrProblem& prob, const QuadratureSpec& quad) {
  return ssvr_risk(prob, HingeIntegrator(prob.noise, quad));
}

AsymptoticSolution ssvr_risk(const SsvrProblem& prob, const HingeIntegrator& integ) {
  validate(prob);
  require_noise(prob.noise, integ);
  const double b = prob.beta / prob.sigma;
  int evals = 0;
  // Partial minimum over g2 of the (jointly convex) value function.
  auto inner = [&](double g1) {
    auto v = [&](double g2) {
      ++evals;
      return dbar_sup(g1, g2, prob, integ).value;
    };
    return detail::minimize_on(v, 0.0, b, 52);
  };
  auto outer = [&](double g1) { return inner(g1).value; };

  double hi = 1.0;
  double prev = outer(0.5);
  while (true) {
    const double v = outer(hi);
    if (v >= prev) break;
    prev = v;
    hi *= 2.0;
    if (hi > kBracketCap) throw ConvergenceError("soft-SVR g1 bracket did not close", hi, b);
  }
  const auto m = detail::minimize_on(outer, 0.0, hi, 52);
  const auto g2m = inner(m.x);
  if (!std::isfinite(m.value) || !std::isfinite(g2m.value))
    throw ConvergenceError("soft-SVR objective is not finite", m.x, g2m.x);

  AsymptoticSolution sol;
  sol.feasible = true;
  sol.g1 = m.x;
  sol.g2 = g2m.x;
  sol.risk = prob.sigma * prob.sigma * (sol.g1 * sol.g1 + sol.g2 * sol.g2);
  sol.cosine = asymptotic_cosine(sol.g1, sol.g2, b);
  sol.chi = dbar_sup(sol.g1, sol.g2, prob, integ).chi;
  sol.diagnostics.evaluations = evals;
  return sol;
}

// ---------------------------------------------------------------- tuning

HsvrTuning tune_hsvr(double delta, double sigma, double beta, const NoiseModel& noise,
                     const QuadratureSpec& quad) {
  return tune_hsvr(delta, sigma, beta, HingeIntegrator(noise, quad));
}

HsvrTuning tune_hsvr(double delta, double sigma, double beta, const HingeIntegrator& integ) {
  HsvrProblem prob{delta, sigma, beta, 0.0, integ.noise()};
  validate(prob);
  // Stay a relative 1e-6 above the threshold so the endpoint itself is feasible.
  const double lo = delta > 1.0 ? epsilon_star(delta, sigma, integ) * (1.0 + 1e-6) : 0.0;
  auto risk_at = [&](double eps) {
    prob.eps = eps;
    const auto sol = hsvr_risk(prob, integ);
    return sol.feasible ? sol.risk : kInf;
  };

  // Geometric scan of eps - lo, stopped once the risk has risen twice past its minimum.
  const double cap = 1e4 * sigma;
  std::vector<double> xs{lo};
  std::vector<double> rs{risk_at(lo)};
  std::size_t best = 0;
  for (double step = 0.01 * sigma; lo + step <= cap * 2.0; step *= 2.0) {
    xs.push_back(lo + step);
    rs.push_back(risk_at(xs.back()));
    if (rs.back() < rs[best]) best = xs.size() - 1;
    if (xs.size() - 1 >= best + 2) break;
  }
  HsvrTuning out;
  if (best == xs.size() - 1) {
    out.at_cap = true;
    out.eps = xs[best];
  } else {
    const double a = xs[best == 0 ? 0 : best - 1];
    const double c = xs[best + 1];
    const auto m = detail::minimize_on(risk_at, a, c, 52);
    out.eps = m.value <= rs[best] ? m.x : xs[best];
  }
  prob.eps = out.eps;
  out.solution = hsvr_risk(prob, integ);
  out.risk = out.solution.risk;
  return out;
}

SsvrTuning tune_ssvr(double delta, double sigma, double beta, const NoiseModel& noise,
                     const QuadratureSpec& quad) {
  return tune_ssvr(delta, sigma, beta, HingeIntegrator(noise, quad));
}

SsvrTuning tune_ssvr(double delta, double sigma, double beta, const HingeIntegrator& integ) {
  SsvrProblem prob{delta, sigma, beta, 0.0, 1.0, integ.noise()};
  validate(prob);
  auto risk_at = [&](double eps, double cost) {
    prob.eps = eps;
    prob.cost = cost;
    return ssvr_risk(prob, integ).risk;
  };

  constexpr std::array<double, 8> eps_grid{0.0, 0.05, 0.1, 0.2, 0.4, 0.8, 1.6, 3.2};
  constexpr std::array<double, 7> cost_grid{0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0};
  double eps = 0.0, cost = 1.0, risk = kInf;
  for (double e : eps_grid)
    for (double c : cost_grid) {
      const double r = risk_at(e * sigma, c * sigma);
      if (r < risk) {
        risk = r;
        eps = e * sigma;
        cost = c * sigma;
      }
    }

  // Alternating scalar refinement; a step is kept only when it lowers the risk.
  for (int round = 0; round < 20; ++round) {
    const double before = risk;
    {
      const double a = eps > 0.0 ? eps / 3.0 : 0.0;
      const double c = eps > 0.0 ? 3.0 * eps : 0.1 * sigma;
      const auto m = detail::minimize_on([&](double e) { return risk_at(e, cost); }, a, c, 30);
      if (m.value < risk) {
        risk = m.value;
        eps = m.x;
      }
    }
    {
      const double lc = std::log(cost);
      const auto m = detail::minimize_on([&](double t) { return risk_at(eps, std::exp(t)); },
                                         lc - std::log(3.0), lc + std::log(3.0), 30);
      if (m.value < risk) {
        risk = m.value;
        cost = std::exp(m.x);
      }
    }
    if (before - risk <= 1e-9 * before) break;
  }

  SsvrTuning out;
  out.eps = eps;
  out.cost = cost;
  prob.eps = eps;
  prob.cost = cost;
  out.solution = ssvr_risk(prob, integ);
  out.risk = out.solution.risk;
  return out;
}

// ---------------------------------------------------------------- ridge

double ridge_optimal_risk(double delta, double sigma, double beta, const NoiseModel& noise) {
  validate(HsvrProblem{delta, sigma, beta, 0.0, noise});
  const double gamma = 1.0 / delta;
  const double s2 = sigma * sigma * noise.second_moment();
  const double lambda = gamma * s2 / (beta * beta);
  // m(z) = [(1 - gamma - z) - sqrt((1 - gamma - z)^2 - 4 gamma z)] / (2 gamma z) at z = -lambda,
  // rewritten without the cancellation in the numerator.
  const double a = 1.0 - gamma + lambda;
  const double root = std::sqrt(a * a + 4.0 * gamma * lambda);
  const double m = a >= 0.0 ? 2.0 / (a + root) : (root - a) / (2.0 * gamma * lambda);
  return gamma * s2 * m;
}

}  // namespace svrasym
