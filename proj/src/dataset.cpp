#include "svrasym/dataset.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/random/normal_distribution.hpp>

namespace svrasym {

Dataset generate_dataset(std::size_t p, double delta, double beta, double sigma,
                         const NoiseModel& noise, std::uint64_t seed, TruthDirection direction) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("delta must be positive");
  const double n = std::floor(delta * static_cast<double>(p));
  if (n < 1.0) throw std::invalid_argument("floor(delta * p) must be at least 1");
  return generate_dataset_n(p, static_cast<std::size_t>(n), beta, sigma, noise, seed, direction);
}

Dataset generate_dataset_n(std::size_t p, std::size_t n, double beta, double sigma,
                           const NoiseModel& noise, std::uint64_t seed, TruthDirection direction) {
  if (p == 0) throw std::invalid_argument("p must be at least 1");
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be nonnegative");
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be nonnegative");

  const auto P = static_cast<Eigen::Index>(p);
  const auto N = static_cast<Eigen::Index>(n);
  boost::random::normal_distribution<double> normal;

  Dataset d;
  d.sigma = sigma;
  d.noise_model = noise;
  d.seed = seed;

  Engine feat_rng = make_engine(derive_seed(seed, {0}));
  d.features.resize(P, N);
  for (Eigen::Index j = 0; j < N; ++j)
    for (Eigen::Index i = 0; i < P; ++i) d.features(i, j) = normal(feat_rng);

  d.truth = Eigen::VectorXd::Zero(P);
  if (direction == TruthDirection::first_axis) {
    d.truth(0) = beta;
  } else {
    Engine dir_rng = make_engine(derive_seed(seed, {1}));
    Eigen::VectorXd g(P);
    double norm = 0.0;
    while (!(norm > 0.0)) {
      for (Eigen::Index i = 0; i < P; ++i) g(i) = normal(dir_rng);
      norm = g.norm();
    }
    d.truth = (beta / norm) * g;
  }

  Engine noise_rng = make_engine(derive_seed(seed, {2}));
  d.noise.resize(N);
  for (Eigen::Index j = 0; j < N; ++j) d.noise(j) = noise.draw(noise_rng);

  d.responses = d.features.transpose() * d.truth + sigma * d.noise;
  return d;
}

}  // namespace svrasym
