#include "svrasym/cli/figures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "svrasym/asymptotics.hpp"
#include "svrasym/detail/parallel.hpp"
#include "svrasym/detail/scalar_search.hpp"
#include "svrasym/montecarlo.hpp"

namespace svrasym::cli {

namespace {

std::vector<double> arange(double lo, double hi, double step) {
  std::vector<double> g;
  for (int k = 0;; ++k) {
    const double v = lo + k * step;
    if (v > hi + 1e-9 * step) break;
    g.push_back(v);
  }
  return g;
}

std::vector<double> logspace(double lo_exp, double hi_exp, int count) {
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    g[static_cast<std::size_t>(i)] = std::pow(10.0, lo_exp + (hi_exp - lo_exp) * i / (count - 1));
  return g;
}

Cell opt(double v) { return std::isfinite(v) ? Cell{v} : Cell{}; }

// Fills a rows x cols block of cells in parallel; fn(row, col) returns the cell.
std::vector<std::vector<Cell>> compute_block(std::size_t rows, std::size_t cols, unsigned threads,
                                             const std::function<Cell(std::size_t, std::size_t)>& fn) {
  std::vector<std::vector<Cell>> out(rows, std::vector<Cell>(cols));
  detail::parallel_for(rows * cols, threads, [&](std::size_t k) {
    out[k / cols][k % cols] = fn(k / cols, k % cols);
  });
  return out;
}

SweepSpec base_sweep(const FigureOptions& o) {
  SweepSpec s;
  s.p = o.p;
  s.trials = o.trials;
  s.threads = o.threads;
  s.solver = o.solver;
  s.quad = o.quad;
  s.theory = false;
  return s;
}

void add_common(Table& t, const std::string& id, const std::string& what, const FigureOptions& o,
                bool has_empirical = true) {
  t.metadata.emplace_back("figure", id);
  t.metadata.emplace_back("description", what);
  if (o.empirical && has_empirical) {
    t.metadata.emplace_back("p", std::to_string(o.p));
    t.metadata.emplace_back("trials", std::to_string(o.trials));
    t.metadata.emplace_back("seed", std::to_string(o.seed));
    t.metadata.emplace_back("solver_tol", format_number(o.solver.tol));
  }
}

void append_columns(Table& t, std::vector<std::vector<Cell>>& cells,
                    const std::vector<std::string>& names, const std::vector<std::vector<Cell>>& block) {
  t.columns.insert(t.columns.end(), names.begin(), names.end());
  for (std::size_t r = 0; r < cells.size(); ++r)
    cells[r].insert(cells[r].end(), block[r].begin(), block[r].end());
}

// Empirical columns (mean, stderr, cosine, feasibility) from a sweep, one row per grid point.
std::vector<std::vector<Cell>> sweep_block(const std::vector<SweepRow>& rows, bool with_cos,
                                           bool with_feasible) {
  std::vector<std::vector<Cell>> out;
  for (const auto& r : rows) {
    std::vector<Cell> c{r.mean_risk, r.stderr_risk};
    if (with_cos) c.push_back(r.mean_cosine);
    if (with_feasible) c.push_back(r.feasibility_rate);
    out.push_back(std::move(c));
  }
  return out;
}

Table finish(Table t, const std::vector<double>& grid, std::vector<std::vector<Cell>> cells) {
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::vector<Cell> row{grid[r]};
    row.insert(row.end(), cells[r].begin(), cells[r].end());
    t.add_row(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------- figures

Table figure1(const FigureOptions& o) {
  Table t;
  add_common(t, "1", "feasibility threshold delta* vs eps", o, false);
  const std::vector<double> sigmas{0.1, 0.2, 0.5, 1.0};
  const auto grid = arange(0.0, 2.0, 0.02);
  const HingeIntegrator integ(NoiseModel::gaussian(), o.quad);
  auto block = compute_block(grid.size(), sigmas.size(), o.threads, [&](std::size_t r, std::size_t c) {
    return opt(delta_star(grid[r], sigmas[c], integ));
  });
  t.columns.push_back("eps");
  for (double s : sigmas) t.columns.push_back(label("delta_star_sigma", s));
  return finish(std::move(t), grid, std::move(block));
}

Table figure2(const FigureOptions& o) {
  Table t;
  add_common(t, "2", "H-SVR risk and cosine vs delta; sigma=1, eps=1", o);
  const std::vector<double> betas{0.5, 1.0, 2.0};
  const HingeIntegrator integ(NoiseModel::gaussian(), o.quad);
  const double ds = delta_star(1.0, 1.0, integ);
  const auto grid = arange(0.05, 0.98 * ds, 0.05);
  t.metadata.emplace_back("delta_star", format_number(ds));
  t.columns.push_back("delta");
  std::vector<std::vector<Cell>> cells(grid.size());
  for (std::size_t b = 0; b < betas.size(); ++b) {
    std::vector<std::vector<Cell>> theory(grid.size(), std::vector<Cell>(3));
    detail::parallel_for(grid.size(), o.threads, [&](std::size_t r) {
      const auto sol = hsvr_risk({grid[r], 1.0, betas[b], 1.0, NoiseModel::gaussian()}, integ);
      theory[r] = {sol.feasible ? opt(sol.risk) : Cell{}, sol.cosine, betas[b] * betas[b]};
    });
    append_columns(t, cells,
                   {label("risk_beta", betas[b]), label("cos_beta", betas[b]), label("null_beta", betas[b])},
                   theory);
  }
  if (o.empirical) {
    for (std::size_t b = 0; b < betas.size(); ++b) {
      SweepSpec s = base_sweep(o);
      s.estimator = Estimator::hsvr;
      s.swept = SweptParameter::delta;
      s.grid = grid;
      s.sigma = 1.0;
      s.eps = 1.0;
      s.beta = betas[b];
      s.base_seed = derive_seed(o.seed, {2, b});
      append_columns(t, cells,
                     {label("emp_risk_beta", betas[b]), label("emp_stderr_beta", betas[b]),
                      label("emp_cos_beta", betas[b]), label("emp_feasible_beta", betas[b])},
                     sweep_block(run_sweep(s), true, true));
    }
  }
  return finish(std::move(t), grid, std::move(cells));
}

Table figure3(const FigureOptions& o, double delta, const std::string& id) {
  Table t;
  add_common(t, id, "H-SVR risk vs eps; beta=1, delta=" + format_number(delta), o);
  const std::vector<double> sigmas{0.5, 0.2};
  const HingeIntegrator integ(NoiseModel::gaussian(), o.quad);
  const auto grid = arange(0.02, 1.0, 0.02);
  t.columns.push_back("eps");
  std::vector<std::vector<Cell>> cells(grid.size());
  for (double s : sigmas) {
    std::vector<std::vector<Cell>> theory(grid.size(), std::vector<Cell>(2));
    detail::parallel_for(grid.size(), o.threads, [&](std::size_t r) {
      const auto sol = hsvr_risk({delta, s, 1.0, grid[r], NoiseModel::gaussian()}, integ);
      if (sol.feasible) theory[r] = {sol.risk, sol.cosine};
    });
    append_columns(t, cells, {label("risk_sigma", s), label("cos_sigma", s)}, theory);
  }
  if (o.empirical) {
    for (std::size_t k = 0; k < sigmas.size(); ++k) {
      SweepSpec s = base_sweep(o);
      s.estimator = Estimator::hsvr;
      s.swept = SweptParameter::eps;
      s.grid = grid;
      s.delta = delta;
      s.sigma = sigmas[k];
      s.beta = 1.0;
      s.base_seed = derive_seed(o.seed, {3, static_cast<std::uint64_t>(delta * 1000), k});
      append_columns(t, cells,
                     {label("emp_risk_sigma", sigmas[k]), label("emp_stderr_sigma", sigmas[k]),
                      label("emp_feasible_sigma", sigmas[k])},
                     sweep_block(run_sweep(s), false, true));
    }
  }
  return finish(std::move(t), grid, std::move(cells));
}

Table figure4(const FigureOptions& o) {
  Table t;
  add_common(t, "4", "H-SVR risk vs delta for fixed and optimal eps; sigma=1, beta=1", o, false);
  const std::vector<double> epss{1.0, 1.2, 1.5};
  const HingeIntegrator integ(NoiseModel::gaussian(), o.quad);
  const auto grid = arange(0.1, 5.0, 0.1);
  auto block = compute_block(grid.size(), epss.size() + 1, o.threads, [&](std::size_t r, std::size_t c) {
    if (c < epss.size()) {
      const auto sol = hsvr_risk({grid[r], 1.0, 1.0, epss[c], NoiseModel::gaussian()}, integ);
      return sol.feasible ? Cell{sol.risk} : Cell{};
    }
    return Cell{tune_hsvr(grid[r], 1.0, 1.0, integ).risk};
  });
  t.columns.push_back("delta");
  for (double e : epss) t.columns.push_back(label("risk_eps", e));
  t.columns.push_back("risk_opt");
  return finish(std::move(t), grid, std::move(block));
}

Table figure5(const FigureOptions& o, bool vs_eps) {
  const std::string id = vs_eps ? "5a" : "5b";
  Table t;
  add_common(t, id,
             vs_eps ? "S-SVR risk vs eps; C=2.4, delta=2, sigma=1, beta=1"
                    : "S-SVR risk vs C; eps=0.6, delta=2, sigma=1, beta=1",
             o);
  const HingeIntegrator integ(NoiseModel::gaussian(), o.quad);
  const auto grid = vs_eps ? arange(0.0, 2.0, 0.05) : logspace(-1.5, 2.0, 29);
  t.columns.push_back(vs_eps ? "eps" : "cost");
  std::vector<std::vector<Cell>> cells(grid.size(), std::vector<Cell>(2));
  detail::parallel_for(grid.size(), o.threads, [&](std::size_t r) {
    const double eps = vs_eps ? grid[r] : 0.6;
    const double cost = vs_eps ? 2.4 : grid[r];
    const auto sol = ssvr_risk({2.0, 1.0, 1.0, eps, cost, NoiseModel::gaussian()}, integ);
    cells[r] = {sol.risk, sol.cosine};
  });
  t.columns.insert(t.columns.end(), {"risk", "cosine"});
  if (o.empirical) {
    SweepSpec s = base_sweep(o);
    s.estimator = Estimator::ssvr;
    s.swept = vs_eps ? SweptParameter::eps : SweptParameter::cost;
    s.grid = grid;
    s.delta = 2.0;
    s.eps = 0.6;
    s.cost = 2.4;
    s.base_seed = derive_seed(o.seed, {5, vs_eps ? 0u : 1u});
    append_columns(t, cells, {"emp_risk", "emp_stderr", "emp_cos"}, sweep_block(run_sweep(s), true, false));
  }
  return finish(std::move(t), grid, std::move(cells));
}

// min over C of the S-SVR risk at fixed eps: log-grid scan, then Brent between neighbours.
std::pair<double, double> tune_cost(double delta, double beta, double eps, const HingeIntegrator& integ) {
  const auto grid = logspace(-2.0, 3.0, 11);
  auto risk = [&](double log_c) {
    return ssvr_risk({delta, 1.0, beta, eps, std::exp(log_c), integ.noise()}, integ).risk;
  };
  std::size_t best = 0;
  double r_best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = risk(std::log(grid[i]));
    if (r < r_best) {
      r_best = r;
      best = i;
    }
  }
  const double lo = std::log(grid[best == 0 ? 0 : best - 1]);
  const double hi = std::log(grid[std::min(best + 1, grid.size() - 1)]);
  const auto m = detail::minimize_on(risk, lo, hi, 30);
  if (m.value < r_best) return {m.value, std::exp(m.x)};
  return {r_best, grid[best]};
}

Table figure6(const FigureOptions& o) {
  Table t;
  add_common(t, "6", "S-SVR risk vs delta for several C and the best C; eps=0.6, sigma=1", o, false);
  const std::vector<double> betas{1.0, 2.0};
  const std::vector<double> costs{0.5, 2.0, 10.0, 50.0};
  const HingeIntegrator integ(NoiseModel::gaussian(), o.quad);
  const auto grid = arange(0.1, 5.0, 0.1);
  t.columns.push_back("delta");
  std::vector<std::vector<Cell>> cells(grid.size());
  for (double b : betas) {
    const std::size_t cols = costs.size() + 2;
    auto block = compute_block(grid.size(), costs.size(), o.threads, [&](std::size_t r, std::size_t c) {
      return Cell{ssvr_risk({grid[r], 1.0, b, 0.6, costs[c], NoiseModel::gaussian()}, integ).risk};
    });
    // best-C column pair computed separately (risk and argmin)
    std::vector<std::pair<double, double>> best(grid.size());
    detail::parallel_for(grid.size(), o.threads,
                         [&](std::size_t r) { best[r] = tune_cost(grid[r], b, 0.6, integ); });
    std::vector<std::vector<Cell>> full(grid.size(), std::vector<Cell>(cols));
    for (std::size_t r = 0; r < grid.size(); ++r) {
      for (std::size_t c = 0; c < costs.size(); ++c) full[r][c] = block[r][c];
      full[r][costs.size()] = best[r].first;
      full[r][costs.size() + 1] = best[r].second;
    }
    std::vector<std::string> names;
    for (double c : costs) names.push_back(label(label("risk_beta", b) + "_C", c));
    names.push_back(label("risk_beta", b) + "_optC");
    names.push_back(label("cost_beta", b) + "_optC");
    append_columns(t, cells, names, full);
  }
  return finish(std::move(t), grid, std::move(cells));
}

Table figure7(const FigureOptions& o, double dof, const std::string& id) {
  Table t;
  add_common(t, id, "tuned H-SVR, S-SVR and oracle ridge vs delta; scale-mixture noise d=" +
                        format_number(dof) + ", sigma=1, beta=1", o);
  const NoiseModel noise = NoiseModel::scale_mixture(dof);
  t.metadata.emplace_back("noise", noise.name());
  const HingeIntegrator integ(noise, o.quad);
  const auto grid = arange(0.2, 3.8, 0.4);
  struct Theory {
    HsvrTuning h;
    SsvrTuning s;
    double ridge = 0.0;
  };
  std::vector<Theory> th(grid.size());
  // two tasks per delta: the S-SVR tuning dominates the cost
  detail::parallel_for(2 * grid.size(), o.threads, [&](std::size_t k) {
    const std::size_t r = k / 2;
    if (k % 2 == 0) {
      th[r].s = tune_ssvr(grid[r], 1.0, 1.0, integ);
    } else {
      th[r].h = tune_hsvr(grid[r], 1.0, 1.0, integ);
      th[r].ridge = ridge_optimal_risk(grid[r], 1.0, 1.0, noise);
    }
  });
  t.columns = {"delta", "hsvr", "ssvr", "ridge", "eps_hsvr", "eps_ssvr", "cost_ssvr"};
  std::vector<std::vector<Cell>> cells(grid.size());
  for (std::size_t r = 0; r < grid.size(); ++r)
    cells[r] = {opt(th[r].h.risk), th[r].s.risk, th[r].ridge, th[r].h.eps, th[r].s.eps, th[r].s.cost};
  if (o.empirical) {
    t.columns.insert(t.columns.end(), {"emp_hsvr", "emp_hsvr_stderr", "emp_ssvr", "emp_ssvr_stderr",
                                       "emp_ridge", "emp_ridge_stderr"});
    for (std::size_t r = 0; r < grid.size(); ++r) {
      for (std::uint64_t e = 0; e < 3; ++e) {
        SweepSpec s = base_sweep(o);
        s.swept = SweptParameter::delta;
        s.grid = {grid[r]};
        s.noise = noise;
        s.estimator = e == 0 ? Estimator::hsvr : e == 1 ? Estimator::ssvr : Estimator::ridge_oracle;
        s.eps = e == 0 ? th[r].h.eps : th[r].s.eps;
        s.cost = th[r].s.cost;
        s.base_seed = derive_seed(o.seed, {7, static_cast<std::uint64_t>(dof), r, e});
        const auto row = run_sweep(s).front();
        cells[r].push_back(row.mean_risk);
        cells[r].push_back(row.stderr_risk);
      }
    }
  }
  return finish(std::move(t), grid, std::move(cells));
}

}  // namespace

std::string label(const std::string& prefix, double value) { return prefix + format_number(value); }

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"1", "2", "3a", "3b", "4", "5a", "5b", "6", "7a", "7b"};
  return ids;
}

Table make_figure(const std::string& id, const FigureOptions& o) {
  validate(o.quad);
  validate(o.solver);
  if (id == "1") return figure1(o);
  if (id == "2") return figure2(o);
  if (id == "3a") return figure3(o, 1.0, id);
  if (id == "3b") return figure3(o, 1.4, id);
  if (id == "4") return figure4(o);
  if (id == "5a") return figure5(o, true);
  if (id == "5b") return figure5(o, false);
  if (id == "6") return figure6(o);
  if (id == "7a") return figure7(o, 3.0, id);
  if (id == "7b") return figure7(o, 10.0, id);
  throw std::invalid_argument("unknown figure id '" + id + "'");
}

}  // namespace svrasym::cli
