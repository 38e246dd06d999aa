#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "svrasym/rng.hpp"

namespace svrasym {

enum class NoiseKind { standard_gaussian, scale_mixture };

/// Law of the noise variable N in y = beta*^T x + sigma * N.
///
/// `scale_mixture` is sqrt(tau) * N(0,1) with tau ~ d / chi2_d, i.e. a Student-t
/// variable with d degrees of freedom. It is deliberately not rescaled to unit
/// variance; second_moment() reports d / (d - 2).
class NoiseModel {
 public:
  static NoiseModel gaussian() { return NoiseModel(NoiseKind::standard_gaussian, 0.0); }
  /// Throws InvalidModelError unless dof > 2 (finite variance).
  static NoiseModel scale_mixture(double dof);

  NoiseKind kind() const noexcept { return kind_; }
  /// Degrees of freedom; 0 for the Gaussian model.
  double dof() const noexcept { return dof_; }

  double pdf(double x) const;
  double second_moment() const;
  /// Draws one noise value from `rng`.
  double draw(Engine& rng) const;

  /// "gaussian" or "t<d>", e.g. "t3".
  std::string name() const;

  friend bool operator==(const NoiseModel&, const NoiseModel&) = default;

 private:
  NoiseModel(NoiseKind kind, double dof);

  NoiseKind kind_;
  double dof_;
  double log_norm_ = 0.0;
};

/// Parses "gaussian" or "t<d>" / "scale_mixture:<d>". Throws InvalidModelError.
NoiseModel parse_noise(const std::string& text);

/// `count` iid draws, deterministic in (model, count, seed).
std::vector<double> sample_noise(const NoiseModel& model, std::size_t count, std::uint64_t seed);

}  // namespace svrasym
