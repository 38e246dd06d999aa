#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "svrasym/noise.hpp"

namespace svrasym {

enum class TruthDirection {
  uniform_sphere,  ///< beta* uniform on the sphere of radius beta
  first_axis,      ///< beta * e_1
};

/// Samples y_i = beta*^T x_i + sigma n_i with iid standard normal features.
struct Dataset {
  Eigen::MatrixXd features;   ///< p x n, one sample per column
  Eigen::VectorXd responses;  ///< length n
  Eigen::VectorXd truth;      ///< beta*, length p
  Eigen::VectorXd noise;      ///< the n_i, length n
  double sigma = 0.0;
  NoiseModel noise_model = NoiseModel::gaussian();
  std::uint64_t seed = 0;

  Eigen::Index p() const { return features.rows(); }
  Eigen::Index n() const { return features.cols(); }
};

/// n = floor(delta p). Throws std::invalid_argument when p = 0, n = 0, beta < 0 or
/// sigma < 0. Features, direction and noise use separate derived streams, so the
/// design matrix does not depend on the noise model.
Dataset generate_dataset(std::size_t p, double delta, double beta, double sigma,
                         const NoiseModel& noise, std::uint64_t seed,
                         TruthDirection direction = TruthDirection::uniform_sphere);

/// Same, with an explicit sample count.
Dataset generate_dataset_n(std::size_t p, std::size_t n, double beta, double sigma,
                           const NoiseModel& noise, std::uint64_t seed,
                           TruthDirection direction = TruthDirection::uniform_sphere);

}  // namespace svrasym
