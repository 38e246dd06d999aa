#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace svrasym::detail {

struct ScalarMin {
  double x;
  double value;
  int evaluations;
};

/// Brent minimization (golden section with parabolic steps) on [lo, hi].
template <class F>
ScalarMin minimize_on(F&& f, double lo, double hi, int bits = 40, int max_iter = 200) {
  std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
  const auto r = boost::math::tools::brent_find_minima(f, lo, hi, bits, iters);
  return {r.first, r.second, static_cast<int>(iters)};
}

/// Root of f on [lo, hi] given a sign change; returns the midpoint of the final bracket.
template <class F>
double root_on(F&& f, double lo, double hi, double flo, double fhi, int bits = 50,
               int max_iter = 200) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
  const auto r = boost::math::tools::toms748_solve(
      f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(bits), iters);
  return 0.5 * (r.first + r.second);
}

}  // namespace svrasym::detail
