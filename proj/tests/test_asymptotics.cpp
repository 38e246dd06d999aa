#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "svrasym/asymptotics.hpp"
#include "svrasym/errors.hpp"

using namespace svrasym;

namespace {

// E (|X| - c)_+^2 for X ~ N(0, v), written out with erfc.
double gauss_hinge_sq(double v, double c) {
  const double sd = std::sqrt(v);
  const double z = c / sd;
  const double tail = 0.5 * std::erfc(z / std::numbers::sqrt2);
  const double dens = std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
  return 2.0 * ((v + c * c) * tail - c * sd * dens);
}

// 1 / min_t E(|G + t sigma N| - t eps)_+^2 for Gaussian N: dense grid on an expanded
// range, then golden-section zoom around the best grid point.
double delta_star_oracle(double eps, double sigma) {
  auto f = [&](double t) { return gauss_hinge_sq(1.0 + t * t * sigma * sigma, t * eps); };
  double hi = 1.0;
  while (f(hi) < f(hi / 2)) hi *= 2.0;
  const int n = 10000;
  int best = 0;
  for (int k = 1; k <= n; ++k)
    if (f(hi * k / n) < f(hi * best / n)) best = k;
  double lo = hi * std::max(best - 1, 0) / n, up = hi * std::min(best + 1, n) / n;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double a = up - g * (up - lo), b = lo + g * (up - lo);
    if (f(a) < f(b)) up = b;
    else lo = a;
  }
  return 1.0 / f(0.5 * (lo + up));
}

// Marchenko-Pastur Stieltjes transform at -lambda by direct integration of the density.
double mp_resolvent(double gamma, double lambda) {
  const double a = std::pow(1 - std::sqrt(gamma), 2), b = std::pow(1 + std::sqrt(gamma), 2);
  boost::math::quadrature::tanh_sinh<double> ts;
  const double cont = ts.integrate(
      [&](double x) {
        return std::sqrt(std::max((b - x) * (x - a), 0.0)) / (2 * std::numbers::pi * gamma * x) / (x + lambda);
      },
      a, b, 1e-13);
  const double atom = gamma > 1 ? (1 - 1 / gamma) / lambda : 0.0;
  return cont + atom;
}

}  // namespace

TEST_CASE("delta_star: eps = 0 gives 1") {
  for (double s : {0.2, 0.5, 1.0, 3.0}) CHECK(std::abs(delta_star(0.0, s, NoiseModel::gaussian()) - 1.0) < 1e-6);
  CHECK(std::abs(delta_star(0.0, 1.0, NoiseModel::scale_mixture(3.0)) - 1.0) < 1e-6);
}

TEST_CASE("delta_star: scale invariance") {
  const auto g = NoiseModel::gaussian();
  CHECK(delta_star(0.1, 0.1, g) == doctest::Approx(delta_star(0.2, 0.2, g)).epsilon(1e-8));
  for (double e : {0.05, 0.4, 1.3})
    for (double s : {0.3, 2.0})
      CHECK(delta_star(e, s, g) == doctest::Approx(delta_star(e / s, 1.0, g)).epsilon(1e-8));
}

TEST_CASE("delta_star matches a dense-grid oracle") {
  for (auto [e, s] : {std::pair{1.0, 1.0}, {0.3, 1.0}, {0.5, 0.2}, {2.0, 1.0}}) {
    CAPTURE(e);
    CAPTURE(s);
    CHECK(delta_star(e, s, NoiseModel::gaussian()) == doctest::Approx(delta_star_oracle(e, s)).epsilon(1e-7));
  }
}

TEST_CASE("delta_star: >= 1, strictly increasing, diverging as sigma -> 0") {
  const HingeIntegrator integ(NoiseModel::gaussian());
  double prev = delta_star(0.0, 1.0, integ);
  for (int k = 1; k <= 30; ++k) {
    const double d = delta_star(0.1 * k, 1.0, integ);
    CHECK(d > prev);
    CHECK(d > 1.0);
    prev = d;
  }
  CHECK(delta_star(1.0, 1e-3, integ) > 1e6);
  const HingeIntegrator t3(NoiseModel::scale_mixture(3.0));
  CHECK(delta_star(0.5, 1.0, t3) < delta_star(1.0, 1.0, t3));
}

TEST_CASE("epsilon_star inverts delta_star") {
  const auto g = NoiseModel::gaussian();
  CHECK(epsilon_star(1.0, 1.0, g) == 0.0);
  CHECK(epsilon_star(0.5, 1.0, g) == 0.0);
  const double d1 = delta_star(1.0, 1.0, g);
  CHECK(std::abs(epsilon_star(d1, 1.0, g) - 1.0) < 1e-5);
  CHECK(delta_star(epsilon_star(2.0, 1.0, g), 1.0, g) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(delta_star(epsilon_star(5.0, 0.4, g), 0.4, g) == doctest::Approx(5.0).epsilon(1e-6));
}

TEST_CASE("d_value: sign at g1 = 0, evenness in g2, slope for delta < 1") {
  const HsvrProblem prob{0.5, 1.0, 1.0, 0.7, NoiseModel::gaussian()};
  for (double g2 : {-2.0, 0.0, 0.3, 1.5}) CHECK(d_value(0.0, g2, prob) >= 0.0);
  CHECK(d_value(0.4, 0.8, prob) == d_value(0.4, -0.8, prob));
  const double slope = (d_value(1000.0, 0.3, prob) - d_value(100.0, 0.3, prob)) / 900.0;
  CHECK(slope == doctest::Approx(std::sqrt(0.5) - 1.0).epsilon(1e-3));
}

TEST_CASE("hsvr_risk: figure anchors") {
  struct Case {
    double delta, sigma, eps, expect;
  };
  for (const auto& c : {Case{1.0, 0.5, 0.40, 0.43336}, Case{1.0, 0.2, 0.10, 0.19071}, Case{1.14, 1.0, 1.0, 0.73908}}) {
    const auto sol = hsvr_risk({c.delta, c.sigma, 1.0, c.eps, NoiseModel::gaussian()});
    CAPTURE(c.delta);
    CAPTURE(c.eps);
    REQUIRE(sol.feasible);
    CHECK(sol.risk == doctest::Approx(c.expect).epsilon(0.005));
    CHECK(sol.diagnostics.residual <= 1e-7);
    CHECK(sol.risk == doctest::Approx(c.sigma * c.sigma * (sol.g1 * sol.g1 + sol.g2 * sol.g2)).epsilon(1e-15));
    REQUIRE(sol.cosine);
    CHECK(std::abs(*sol.cosine) <= 1.0);
  }
}

TEST_CASE("hsvr_risk: null limit and infeasibility") {
  const auto tiny = hsvr_risk({1e-4, 1.0, 1.0, 1.0, NoiseModel::gaussian()});
  CHECK(tiny.risk == doctest::Approx(1.0).epsilon(1e-2));
  const auto bad = hsvr_risk({10.0, 1.0, 1.0, 0.1, NoiseModel::gaussian()});
  CHECK_FALSE(bad.feasible);
  CHECK(std::isnan(bad.risk));
  CHECK_THROWS_AS(hsvr_risk({-1.0, 1.0, 1.0, 0.1, NoiseModel::gaussian()}), std::invalid_argument);
  CHECK_THROWS_AS(hsvr_risk({1.0, 1.0, 1.0, -0.1, NoiseModel::gaussian()}), std::invalid_argument);
}

TEST_CASE("hsvr_risk: unconstrained g2 spot-check") {
  // minimize over g2 on a wide grid (negative values and beyond beta/sigma included),
  // with L(g2) from plain bisection on d_value
  for (const HsvrProblem prob : {HsvrProblem{1.0, 0.5, 1.0, 0.4, NoiseModel::gaussian()},
                                 HsvrProblem{1.5, 1.0, 2.0, 1.0, NoiseModel::gaussian()},
                                 HsvrProblem{2.0, 1.0, 1.0, 1.5, NoiseModel::scale_mixture(5.0)}}) {
    const HingeIntegrator integ(prob.noise);
    const auto sol = hsvr_risk(prob, integ);
    REQUIRE(sol.feasible);
    const double b = prob.beta / prob.sigma;
    double best = INFINITY;
    for (int k = 0; k <= 600; ++k) {
      const double g2 = -b + 3.0 * b * k / 600;
      // first sign change of d_value in g1, found on a grid and bisected
      double lo = 0.0, hi = NAN;
      for (double g = 0.01; g < 1e3; g *= 1.05)
        if (d_value(g, g2, prob, integ) <= 0.0) {
          hi = g;
          break;
        }
      if (std::isnan(hi)) continue;
      if (d_value(0.0, g2, prob, integ) <= 0.0) hi = 0.0;
      for (int it = 0; it < 100 && hi > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        (d_value(mid, g2, prob, integ) <= 0.0 ? hi : lo) = mid;
      }
      best = std::min(best, 0.5 * hi * hi + 0.5 * (g2 - b) * (g2 - b));
    }
    const double lib = 0.5 * sol.g1 * sol.g1 + 0.5 * (sol.g2 - b) * (sol.g2 - b);
    CHECK(lib <= best + 1e-9);
    CHECK(sol.g2 >= 0.0);
    CHECK(sol.g2 <= b);
  }
}

TEST_CASE("tune_hsvr: anchors and monotonicity") {
  const auto g = NoiseModel::gaussian();
  CHECK(tune_hsvr(5.0, 1.0, 1.0, g).risk == doctest::Approx(0.43891).epsilon(0.005));
  CHECK(tune_hsvr(0.1, 1.0, 1.0, g).risk == doctest::Approx(0.96099).epsilon(0.005));
  const double r1 = tune_hsvr(1.0, 1.0, 1.0, g).risk, r2 = tune_hsvr(2.0, 1.0, 1.0, g).risk,
               r4 = tune_hsvr(4.0, 1.0, 1.0, g).risk;
  CHECK(r1 > r2);
  CHECK(r2 > r4);
  // the tuned risk is no worse than any feasible fixed eps
  const auto t = tune_hsvr(2.0, 1.0, 1.0, g);
  for (double e : {1.1, 1.3, 1.6, 2.0, 3.0}) CHECK(t.risk <= hsvr_risk({2.0, 1.0, 1.0, e, g}).risk + 1e-9);
  CHECK(t.eps > epsilon_star(2.0, 1.0, g));
}

TEST_CASE("dbar: null limit as delta -> 0") {
  const SsvrProblem prob{1e-9, 1.0, 1.0, 0.5, 2.0, NoiseModel::gaussian()};
  for (auto [g1, g2] : {std::pair{0.3, 0.4}, {1.0, 0.9}, {0.0, 0.2}}) {
    const double quad = 0.5 * g1 * g1 + 0.5 * (g2 - 1.0) * (g2 - 1.0);
    CHECK(dbar_sup(g1, g2, prob).value == doctest::Approx(quad).epsilon(1e-6));
  }
}

TEST_CASE("dbar: concave in chi and the supremum matches a golden-section search") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.05, 2.0);
  const SsvrProblem prob{2.0, 1.0, 1.0, 0.6, 2.4, NoiseModel::gaussian()};
  const HingeIntegrator integ(prob.noise);
  for (int k = 0; k < 20; ++k) {
    const double g1 = u(rng), g2 = u(rng) - 0.5;
    const double h = 0.01;
    for (int i = 2; i < 300; ++i) {
      const double c = h * i;
      const double d2 = dbar_value(g1, g2, c - h, prob, integ) - 2 * dbar_value(g1, g2, c, prob, integ) +
                        dbar_value(g1, g2, c + h, prob, integ);
      CHECK(d2 <= 1e-10);
    }
    // golden section on log chi over a wide bracket
    auto f = [&](double t) { return dbar_value(g1, g2, std::exp(t), prob, integ); };
    double lo = std::log(1e-8), hi = std::log(1e4);
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 200; ++it) {
      const double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
      if (f(a) > f(b)) hi = b;
      else lo = a;
    }
    const auto sup = dbar_sup(g1, g2, prob, integ);
    CHECK(sup.value == doctest::Approx(f(0.5 * (lo + hi))).epsilon(1e-8));
    CHECK(sup.value >= f(0.5 * (lo + hi)) - 1e-10);
  }
}

TEST_CASE("dbar: hinge-free parameters leave the quadratic terms") {
  const SsvrProblem prob{2.0, 1.0, 1.0, 1e4, 1e3, NoiseModel::gaussian()};
  const auto sup = dbar_sup(0.5, 0.2, prob);
  CHECK(sup.value == doctest::Approx(0.5 * 0.25 + 0.5 * 0.64).epsilon(1e-12));
  REQUIRE(sup.chi);
  CHECK(*sup.chi == 0.0);
  CHECK_THROWS_AS(dbar_value(0.5, 0.2, 0.0, prob), std::domain_error);
}

TEST_CASE("ssvr_risk: null limit, saddle stationarity, hard limit") {
  const auto g = NoiseModel::gaussian();
  CHECK(ssvr_risk({1e-4, 1.0, 1.0, 0.6, 2.4, g}).risk == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(ssvr_risk({1e-4, 1.0, 2.0, 0.1, 50.0, g}).risk == doctest::Approx(4.0).epsilon(1e-2));

  for (const SsvrProblem prob : {SsvrProblem{2.0, 1.0, 1.0, 0.6, 2.4, g}, SsvrProblem{0.7, 0.5, 1.0, 0.2, 0.5, g},
                                 SsvrProblem{3.0, 1.0, 1.0, 0.5, 1.0, NoiseModel::scale_mixture(3.0)}}) {
    const HingeIntegrator integ(prob.noise);
    const auto sol = ssvr_risk(prob, integ);
    CHECK(sol.feasible);
    const double v0 = dbar_sup(sol.g1, sol.g2, prob, integ).value;
    for (auto [d1, d2] : {std::pair{1e-4, 0.0}, {-1e-4, 0.0}, {0.0, 1e-4}, {0.0, -1e-4}}) {
      if (sol.g1 + d1 < 0.0) continue;
      CHECK(dbar_sup(sol.g1 + d1, sol.g2 + d2, prob, integ).value >= v0 - 1e-8);
    }
  }

  for (auto [delta, eps] : {std::pair{2.0, 1.5}, {1.0, 0.4}, {0.5, 0.5}}) {
    const auto hard = hsvr_risk({delta, 1.0, 1.0, eps, g});
    REQUIRE(hard.feasible);
    const auto soft = ssvr_risk({delta, 1.0, 1.0, eps, 1e6, g});
    CHECK(std::abs(soft.risk - hard.risk) < 1e-3);
  }
}

TEST_CASE("tune_ssvr dominates grid points") {
  const auto g = NoiseModel::gaussian();
  const auto t = tune_ssvr(2.0, 1.0, 1.0, g);
  for (double e : {0.0, 0.2, 0.6, 1.2})
    for (double c : {0.3, 1.0, 3.0, 10.0}) CHECK(t.risk <= ssvr_risk({2.0, 1.0, 1.0, e, c, g}).risk + 1e-12);
}

TEST_CASE("ridge_optimal_risk matches the Marchenko-Pastur integral") {
  for (double delta : {0.2, 0.9, 1.0, 1.7, 3.8})
    for (auto [sigma, beta] : {std::pair{1.0, 1.0}, {0.5, 2.0}}) {
      const auto noise = NoiseModel::scale_mixture(10.0);
      const double gamma = 1.0 / delta;
      const double s2 = sigma * sigma * noise.second_moment();
      const double lam = gamma * s2 / (beta * beta);
      const double expect = gamma * s2 * mp_resolvent(gamma, lam);
      CAPTURE(delta);
      CHECK(ridge_optimal_risk(delta, sigma, beta, noise) == doctest::Approx(expect).epsilon(1e-8));
      CHECK(ridge_optimal_risk(delta, sigma, beta, noise) < beta * beta);
    }
}

TEST_CASE("cosine floor") {
  CHECK_FALSE(asymptotic_cosine(0.0, 1.0, 1.0));
  CHECK(*asymptotic_cosine(0.0, 0.0, 1.0) == doctest::Approx(1.0));
  CHECK(*asymptotic_cosine(1.0, 1.0, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("a mismatched integrator is rejected") {
  const HingeIntegrator t3(NoiseModel::scale_mixture(3.0));
  CHECK_THROWS(hsvr_risk({1.0, 1.0, 1.0, 0.5, NoiseModel::gaussian()}, t3));
}
