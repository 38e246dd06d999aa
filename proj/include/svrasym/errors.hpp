#pragma once

#include <stdexcept>
#include <string>

namespace svrasym {

/// Noise model parameters outside the admissible family (finite variance, symmetric).
class InvalidModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside the regime an estimator or formula supports (e.g. n <= p).
class UnsupportedRegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative scalar solver stopped without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_g1, double best_g2)
      : std::runtime_error(what), best_g1_(best_g1), best_g2_(best_g2) {}

  double best_g1() const noexcept { return best_g1_; }
  double best_g2() const noexcept { return best_g2_; }

 private:
  double best_g1_;
  double best_g2_;
};

}  // namespace svrasym
