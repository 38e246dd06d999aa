#include "svrasym/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "svrasym/asymptotics.hpp"
#include "svrasym/detail/parallel.hpp"
#include "svrasym/estimators.hpp"

namespace svrasym {

std::string_view to_string(Estimator e) {
  switch (e) {
    case Estimator::hsvr: return "hsvr";
    case Estimator::ssvr: return "ssvr";
    case Estimator::ridge_oracle: return "ridge_oracle";
    case Estimator::null: return "null";
  }
  return "unknown";
}

std::string_view to_string(SweptParameter s) {
  switch (s) {
    case SweptParameter::delta: return "delta";
    case SweptParameter::eps: return "eps";
    case SweptParameter::cost: return "cost";
  }
  return "unknown";
}

Estimator parse_estimator(std::string_view text) {
  for (Estimator e : {Estimator::hsvr, Estimator::ssvr, Estimator::ridge_oracle, Estimator::null})
    if (text == to_string(e)) return e;
  if (text == "ridge") return Estimator::ridge_oracle;
  throw std::invalid_argument("unknown estimator '" + std::string(text) + "'");
}

SweptParameter parse_swept(std::string_view text) {
  for (SweptParameter s : {SweptParameter::delta, SweptParameter::eps, SweptParameter::cost})
    if (text == to_string(s)) return s;
  throw std::invalid_argument("unknown swept parameter '" + std::string(text) + "'");
}

void validate(const SweepSpec& spec) {
  if (spec.grid.empty()) throw std::invalid_argument("sweep grid is empty");
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    const double v = spec.grid[i];
    if (!std::isfinite(v)) throw std::invalid_argument("sweep grid values must be finite");
    if (i > 0 && !(v > spec.grid[i - 1]))
      throw std::invalid_argument("sweep grid must be strictly increasing");
    const bool positive = spec.swept != SweptParameter::eps;
    if (positive ? !(v > 0.0) : !(v >= 0.0))
      throw std::invalid_argument("sweep grid value out of range for " +
                                  std::string(to_string(spec.swept)));
  }
  if (spec.trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (spec.p == 0) throw std::invalid_argument("p must be at least 1");
  if (!(spec.sigma > 0.0) || !(spec.beta > 0.0) || !(spec.delta > 0.0) || !(spec.eps >= 0.0) ||
      !(spec.cost > 0.0))
    throw std::invalid_argument("sweep parameters out of range");
  validate(spec.solver);
}

namespace {

struct Point {
  double delta, eps, cost;
};

Point point_at(const SweepSpec& spec, std::size_t g) {
  Point pt{spec.delta, spec.eps, spec.cost};
  const double v = spec.grid.at(g);
  switch (spec.swept) {
    case SweptParameter::delta: pt.delta = v; break;
    case SweptParameter::eps: pt.eps = v; break;
    case SweptParameter::cost: pt.cost = v; break;
  }
  return pt;
}

}  // namespace

TrialResult run_trial(const SweepSpec& spec, std::size_t grid_index, std::size_t trial_index) {
  const Point pt = point_at(spec, grid_index);
  const std::uint64_t seed = derive_seed(spec.base_seed, {grid_index, trial_index});
  const Dataset data =
      generate_dataset(spec.p, pt.delta, spec.beta, spec.sigma, spec.noise, seed, spec.direction);
  TrialResult r;
  Eigen::VectorXd w;
  switch (spec.estimator) {
    case Estimator::hsvr: {
      SvrFit fit = solve_hard_svr(data, pt.eps, spec.solver);
      r.status = fit.status;
      r.feasible = fit.status != FitStatus::infeasible;
      w = std::move(fit.weights);
      break;
    }
    case Estimator::ssvr: {
      SvrFit fit = solve_soft_svr(data, pt.eps, pt.cost, spec.solver);
      r.status = fit.status;
      w = std::move(fit.weights);
      break;
    }
    case Estimator::ridge_oracle:
      w = oracle_ridge(data).weights;
      break;
    case Estimator::null:
      w = Eigen::VectorXd::Zero(data.p());
      break;
  }
  if (r.feasible) {
    r.risk = prediction_risk(w, data.truth);
    r.cosine = cosine_similarity(w, data.truth);
  }
  return r;
}

SweepRow theory_row(const SweepSpec& spec, std::size_t grid_index) {
  const Point pt = point_at(spec, grid_index);
  SweepRow row;
  row.value = spec.grid.at(grid_index);
  switch (spec.estimator) {
    case Estimator::hsvr: {
      const auto sol = hsvr_risk({pt.delta, spec.sigma, spec.beta, pt.eps, spec.noise}, spec.quad);
      if (sol.feasible) {
        row.theory_risk = sol.risk;
        row.theory_cosine = sol.cosine;
      }
      break;
    }
    case Estimator::ssvr: {
      const auto sol =
          ssvr_risk({pt.delta, spec.sigma, spec.beta, pt.eps, pt.cost, spec.noise}, spec.quad);
      row.theory_risk = sol.risk;
      row.theory_cosine = sol.cosine;
      break;
    }
    case Estimator::null:
      row.theory_risk = spec.beta * spec.beta;
      break;
    case Estimator::ridge_oracle:
      break;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate(spec);
  const std::size_t G = spec.grid.size();
  const std::size_t T = spec.trials;
  std::vector<TrialResult> results(G * T);
  std::vector<SweepRow> rows(G);
  // Theory points first (indices [0, G)), then trials; every task owns its slot.
  const std::size_t theory_tasks = spec.theory ? G : 0;
  detail::parallel_for(theory_tasks + G * T, spec.threads, [&](std::size_t task) {
    if (task < theory_tasks) {
      rows[task] = theory_row(spec, task);
      return;
    }
    const std::size_t k = task - theory_tasks;
    results[k] = run_trial(spec, k / T, k % T);
  });

  for (std::size_t g = 0; g < G; ++g) {
    SweepRow& row = rows[g];
    row.value = spec.grid[g];
    double sum = 0.0, cos_sum = 0.0;
    std::size_t used = 0, cos_count = 0;
    for (std::size_t t = 0; t < T; ++t) {
      const TrialResult& r = results[g * T + t];
      if (r.status == FitStatus::max_iters) ++row.unconverged;
      if (!r.feasible) continue;
      ++used;
      sum += r.risk;
      if (r.cosine) {
        cos_sum += *r.cosine;
        ++cos_count;
      }
    }
    row.trials_used = used;
    row.feasibility_rate = static_cast<double>(used) / static_cast<double>(T);
    if (used == 0) continue;
    const double mean = sum / static_cast<double>(used);
    double ss = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
      const TrialResult& r = results[g * T + t];
      if (r.feasible) ss += (r.risk - mean) * (r.risk - mean);
    }
    row.mean_risk = mean;
    row.stderr_risk =
        used > 1 ? std::sqrt(ss / static_cast<double>(used - 1) / static_cast<double>(used)) : 0.0;
    if (cos_count > 0) row.mean_cosine = cos_sum / static_cast<double>(cos_count);
  }
  return rows;
}

std::vector<FeasibilityRow> feasibility_curve(std::size_t p, double eps, double sigma,
                                              const NoiseModel& noise,
                                              const std::vector<double>& delta_grid,
                                              std::size_t trials, std::uint64_t base_seed,
                                              unsigned threads, const SolverConfig& solver) {
  SweepSpec spec;
  spec.estimator = Estimator::hsvr;
  spec.swept = SweptParameter::delta;
  spec.grid = delta_grid;
  spec.eps = eps;
  spec.sigma = sigma;
  spec.noise = noise;
  spec.p = p;
  spec.trials = trials;
  spec.base_seed = base_seed;
  spec.theory = false;
  spec.solver = solver;
  spec.threads = threads;
  const auto rows = run_sweep(spec);
  std::vector<FeasibilityRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back({r.value, r.feasibility_rate});
  return out;
}

}  // namespace svrasym
