#include "svrasym/noise.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/random/chi_squared_distribution.hpp>
#include <boost/random/normal_distribution.hpp>

#include "svrasym/errors.hpp"

namespace svrasym {

NoiseModel::NoiseModel(NoiseKind kind, double dof) : kind_(kind), dof_(dof) {
  if (kind_ == NoiseKind::scale_mixture) {
    log_norm_ = std::lgamma(0.5 * (dof_ + 1.0)) - std::lgamma(0.5 * dof_) -
                0.5 * std::log(dof_ * std::numbers::pi);
  } else {
    log_norm_ = -0.5 * std::log(2.0 * std::numbers::pi);
  }
}

NoiseModel NoiseModel::scale_mixture(double dof) {
  if (!(dof > 2.0) || !std::isfinite(dof)) {
    std::ostringstream msg;
    msg << "scale mixture needs dof > 2 for a finite second moment, got " << dof;
    throw InvalidModelError(msg.str());
  }
  return NoiseModel(NoiseKind::scale_mixture, dof);
}

double NoiseModel::pdf(double x) const {
  if (kind_ == NoiseKind::standard_gaussian) return std::exp(log_norm_ - 0.5 * x * x);
  return std::exp(log_norm_ - 0.5 * (dof_ + 1.0) * std::log1p(x * x / dof_));
}

double NoiseModel::second_moment() const {
  return kind_ == NoiseKind::standard_gaussian ? 1.0 : dof_ / (dof_ - 2.0);
}

double NoiseModel::draw(Engine& rng) const {
  boost::random::normal_distribution<double> normal;
  if (kind_ == NoiseKind::standard_gaussian) return normal(rng);
  boost::random::chi_squared_distribution<double> chi2(dof_);
  const double tau = dof_ / chi2(rng);
  return std::sqrt(tau) * normal(rng);
}

std::string NoiseModel::name() const {
  if (kind_ == NoiseKind::standard_gaussian) return "gaussian";
  std::ostringstream out;
  out << 't' << dof_;
  return out.str();
}

NoiseModel parse_noise(const std::string& text) {
  if (text == "gaussian" || text == "normal") return NoiseModel::gaussian();
  std::string number;
  if (text.size() > 1 && text[0] == 't') {
    number = text.substr(1);
  } else if (text.rfind("scale_mixture:", 0) == 0) {
    number = text.substr(14);
  } else {
    throw InvalidModelError("unknown noise model '" + text + "' (expected gaussian or t<dof>)");
  }
  std::size_t used = 0;
  double dof = 0.0;
  try {
    dof = std::stod(number, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != number.size() || number.empty())
    throw InvalidModelError("bad degrees of freedom in noise model '" + text + "'");
  return NoiseModel::scale_mixture(dof);
}

std::vector<double> sample_noise(const NoiseModel& model, std::size_t count, std::uint64_t seed) {
  Engine rng = make_engine(seed);
  std::vector<double> out(count);
  for (double& v : out) v = model.draw(rng);
  return out;
}

}  // namespace svrasym
