#include "svrasym/cli/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "svrasym/asymptotics.hpp"
#include "svrasym/cli/csv.hpp"
#include "svrasym/cli/figures.hpp"
#include "svrasym/errors.hpp"
#include "svrasym/estimators.hpp"
#include "svrasym/montecarlo.hpp"

namespace svrasym::cli {

namespace {

double parse_double(const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw std::invalid_argument("bad number '" + text + "'");
  return v;
}

struct ProblemFlags {
  double delta = 1.0;
  double sigma = 1.0;
  double beta = 1.0;
  double eps = 0.0;
  double cost = 1.0;
  std::string noise = "gaussian";
};

void add_problem_flags(CLI::App* app, ProblemFlags& f, bool with_delta, bool with_cost) {
  if (with_delta) app->add_option("--delta", f.delta, "sample ratio n/p")->capture_default_str();
  app->add_option("--sigma", f.sigma, "noise scale")->capture_default_str();
  app->add_option("--beta", f.beta, "signal norm")->capture_default_str();
  app->add_option("--eps", f.eps, "tube half-width")->capture_default_str();
  if (with_cost) app->add_option("--cost", f.cost, "soft-SVR cost C")->capture_default_str();
  app->add_option("--noise", f.noise, "gaussian | t<d>")->capture_default_str();
}

struct SampleFlags {
  std::size_t p = 200;
  std::uint64_t seed = 1;
  std::string direction = "sphere";
  std::string data;
};

void add_sample_flags(CLI::App* app, SampleFlags& f) {
  app->add_option("--p", f.p, "dimension")->capture_default_str();
  app->add_option("--seed", f.seed, "base seed")->capture_default_str();
  app->add_option("--direction", f.direction, "truth direction: sphere | axis")
      ->check(CLI::IsMember({"sphere", "axis"}))
      ->capture_default_str();
}

TruthDirection to_direction(const std::string& s) {
  return s == "axis" ? TruthDirection::first_axis : TruthDirection::uniform_sphere;
}

struct SolverFlags {
  double tol;
  int max_iters = SolverConfig{}.max_iters;
};

void add_solver_flags(CLI::App* app, SolverFlags& f) {
  app->add_option("--tol", f.tol, "relative duality-gap tolerance")->capture_default_str();
  app->add_option("--max-iters", f.max_iters, "iteration budget")->capture_default_str();
}

SolverConfig to_solver(const SolverFlags& f) {
  SolverConfig c;
  c.tol = f.tol;
  c.max_iters = f.max_iters;
  validate(c);
  return c;
}

Cell flag(bool b) { return b ? 1.0 : 0.0; }

void add_fixed(Table& t, const std::string& key, double v) { t.metadata.emplace_back(key, format_number(v)); }

DataFile load_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file '" + path + "'");
  return read_data_csv(in);
}

void save_data(const std::string& path, const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write data file '" + path + "'");
  write_data_csv(out, x, y);
}

class Tool {
 public:
  Tool() : app_("Asymptotics and finite-sample experiments for hard and soft SVR.", "svrasym") {
    app_.set_version_flag("--version", std::string("svrasym ") + kToolVersion);
    app_.set_config("--config", "", "INI config file; [section] names match subcommands");
    app_.allow_config_extras(CLI::config_extras_mode::error);
    app_.require_subcommand(1);
    app_.add_option("--threads", threads_, "worker threads, 0 = all cores")->capture_default_str();
    app_.add_option("--output,-o", output_, "write the table to this file instead of stdout");
    app_.add_option("--gauss-nodes", quad_.gauss_nodes_G, "Gauss-Hermite nodes (cross-check route)")
        ->capture_default_str();
    app_.add_option("--mixture-nodes", quad_.mixture_nodes, "mixture rule nodes for t noise")
        ->capture_default_str();
    app_.add_option("--abs-tol", quad_.abs_tol, "quadrature tolerance")->capture_default_str();

    setup_delta_star();
    setup_risk();
    setup_tune();
    setup_solve();
    setup_estimate();
    setup_sweep();
    setup_figure();
  }

  int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app_.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }
    for (int i = 1; i < argc; ++i) command_line_ += (i > 1 ? " " : "") + std::string(argv[i]);
    try {
      validate(quad_);
      return action_(out, err);
    } catch (const UnsupportedRegimeError& e) {
      err << "unsupported regime: " << e.what() << '\n';
      return kExitInfeasible;
    } catch (const ConvergenceError& e) {
      err << "no convergence: " << e.what() << '\n';
      return kExitInfeasible;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }

 private:
  using Action = std::function<int(std::ostream&, std::ostream&)>;

  Table header() const {
    Table t;
    t.metadata.emplace_back("tool", std::string("svrasym ") + kToolVersion);
    t.metadata.emplace_back("command", command_line_);
    // global keys plus those of the selected subcommand
    const std::string prefix = app_.get_subcommands().front()->get_name() + ".";
    std::istringstream cfg(app_.config_to_str(true, false));
    for (std::string line; std::getline(cfg, line);) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const auto dot = line.find('.');
      if (dot > eq || line.compare(0, prefix.size(), prefix) == 0) t.metadata.emplace_back("config", line);
    }
    return t;
  }

  void emit(const Table& t, std::ostream& out) const {
    if (output_.empty()) {
      write_csv(out, t);
      return;
    }
    std::ofstream file(output_);
    if (!file) throw std::runtime_error("cannot write '" + output_ + "'");
    write_csv(file, t);
  }

  // ------------------------------------------------------------ delta-star
  void setup_delta_star() {
    auto* sub = app_.add_subcommand("delta-star", "feasibility threshold of the hard SVR");
    sub->add_option("--eps", ds_.eps, "tube half-width")->required();
    sub->add_option("--sigma", ds_.sigma, "noise scale")->capture_default_str();
    sub->add_option("--noise", ds_.noise, "gaussian | t<d>")->capture_default_str();
    sub->callback([this] {
      action_ = [this](std::ostream& out, std::ostream&) {
        const NoiseModel noise = parse_noise(ds_.noise);
        if (!(ds_.sigma > 0.0) || ds_.eps < 0.0)
          throw std::invalid_argument("need sigma > 0 and eps >= 0");
        Table t = header();
        t.columns = {"eps", "sigma", "delta_star"};
        t.add_row({ds_.eps, ds_.sigma, delta_star(ds_.eps, ds_.sigma, noise, quad_)});
        emit(t, out);
        return kExitOk;
      };
    });
  }

  // ------------------------------------------------------------ risk
  void setup_risk() {
    auto* sub = app_.add_subcommand("risk", "asymptotic risk of the hard or soft SVR");
    sub->add_option("estimator", risk_est_, "hsvr | ssvr")
        ->required()
        ->check(CLI::IsMember({"hsvr", "ssvr"}));
    add_problem_flags(sub, risk_, true, true);
    sub->callback([this] {
      action_ = [this](std::ostream& out, std::ostream& err) { return do_risk(out, err); };
    });
  }

  int do_risk(std::ostream& out, std::ostream& err) {
    const NoiseModel noise = parse_noise(risk_.noise);
    const HingeIntegrator integ(noise, quad_);
    Table t = header();
    if (risk_est_ == "hsvr") {
      const HsvrProblem prob{risk_.delta, risk_.sigma, risk_.beta, risk_.eps, noise};
      validate(prob);
      const auto sol = hsvr_risk(prob, integ);
      const double ds = delta_star(prob.eps, prob.sigma, integ);
      t.columns = {"delta", "sigma", "beta", "eps", "feasible", "risk", "cosine",
                   "g1",    "g2",    "delta_star", "residual"};
      t.add_row({prob.delta, prob.sigma, prob.beta, prob.eps, flag(sol.feasible),
                 sol.feasible ? Cell{sol.risk} : Cell{}, sol.cosine,
                 sol.feasible ? Cell{sol.g1} : Cell{}, sol.feasible ? Cell{sol.g2} : Cell{}, ds,
                 sol.feasible ? Cell{sol.diagnostics.residual} : Cell{}});
      emit(t, out);
      if (!sol.feasible) {
        err << "infeasible: delta = " << format_number(prob.delta)
            << " >= delta_star = " << format_number(ds) << '\n';
        return kExitInfeasible;
      }
      return kExitOk;
    }
    const SsvrProblem prob{risk_.delta, risk_.sigma, risk_.beta, risk_.eps, risk_.cost, noise};
    validate(prob);
    const auto sol = ssvr_risk(prob, integ);
    t.columns = {"delta", "sigma", "beta", "eps", "cost", "feasible", "risk", "cosine", "g1", "g2", "chi"};
    t.add_row({prob.delta, prob.sigma, prob.beta, prob.eps, prob.cost, flag(true), sol.risk, sol.cosine,
               sol.g1, sol.g2, sol.chi});
    emit(t, out);
    return kExitOk;
  }

  // ------------------------------------------------------------ tune
  void setup_tune() {
    auto* sub = app_.add_subcommand("tune", "risk-minimizing hyperparameters");
    sub->add_option("estimator", tune_est_, "hsvr | ssvr | ridge")
        ->required()
        ->check(CLI::IsMember({"hsvr", "ssvr", "ridge"}));
    sub->add_option("--delta", tune_.delta, "sample ratio n/p")->capture_default_str();
    sub->add_option("--sigma", tune_.sigma, "noise scale")->capture_default_str();
    sub->add_option("--beta", tune_.beta, "signal norm")->capture_default_str();
    sub->add_option("--noise", tune_.noise, "gaussian | t<d>")->capture_default_str();
    sub->callback([this] {
      action_ = [this](std::ostream& out, std::ostream& err) { return do_tune(out, err); };
    });
  }

  int do_tune(std::ostream& out, std::ostream& err) {
    const NoiseModel noise = parse_noise(tune_.noise);
    validate(HsvrProblem{tune_.delta, tune_.sigma, tune_.beta, 0.0, noise});
    Table t = header();
    add_fixed(t, "delta", tune_.delta);
    add_fixed(t, "sigma", tune_.sigma);
    add_fixed(t, "beta", tune_.beta);
    t.metadata.emplace_back("noise", noise.name());
    if (tune_est_ == "ridge") {
      const double s2 = tune_.sigma * tune_.sigma * noise.second_moment();
      t.columns = {"lambda", "risk"};
      t.add_row({s2 / (tune_.delta * tune_.beta * tune_.beta),
                 ridge_optimal_risk(tune_.delta, tune_.sigma, tune_.beta, noise)});
      emit(t, out);
      return kExitOk;
    }
    const HingeIntegrator integ(noise, quad_);
    if (tune_est_ == "hsvr") {
      const auto r = tune_hsvr(tune_.delta, tune_.sigma, tune_.beta, integ);
      t.columns = {"eps", "risk", "cosine", "g1", "g2", "at_cap"};
      t.add_row({r.eps, r.risk, r.solution.cosine, r.solution.g1, r.solution.g2, flag(r.at_cap)});
      if (r.at_cap) err << "note: risk still decreasing at the largest eps tried\n";
    } else {
      const auto r = tune_ssvr(tune_.delta, tune_.sigma, tune_.beta, integ);
      t.columns = {"eps", "cost", "risk", "cosine", "g1", "g2"};
      t.add_row({r.eps, r.cost, r.risk, r.solution.cosine, r.solution.g1, r.solution.g2});
    }
    emit(t, out);
    return kExitOk;
  }

  // ------------------------------------------------------------ solve
  void setup_solve() {
    auto* sub = app_.add_subcommand("solve", "fit one finite-sample estimator");
    sub->add_option("estimator", solve_est_, "hsvr | ssvr | ridge")
        ->required()
        ->check(CLI::IsMember({"hsvr", "ssvr", "ridge"}));
    add_problem_flags(sub, solve_, true, true);
    add_sample_flags(sub, solve_sample_);
    sub->add_option("--data", solve_sample_.data, "CSV file y,x1..xp instead of generated data");
    sub->add_option("--save-data", solve_save_, "write the data set used to this CSV file");
    sub->add_option("--lambda", solve_lambda_, "ridge penalty (default: oracle tuning)");
    solve_solver_.tol = SolverConfig{}.tol;
    add_solver_flags(sub, solve_solver_);
    sub->callback([this] {
      action_ = [this](std::ostream& out, std::ostream& err) { return do_solve(out, err); };
    });
  }

  int do_solve(std::ostream& out, std::ostream& err) {
    Eigen::MatrixXd x;
    Eigen::VectorXd y;
    std::optional<Eigen::VectorXd> truth;
    Table t = header();
    if (!solve_sample_.data.empty()) {
      auto file = load_data(solve_sample_.data);
      x = std::move(file.features);
      y = std::move(file.responses);
      t.metadata.emplace_back("data", solve_sample_.data);
    } else {
      auto d = generate_dataset(solve_sample_.p, solve_.delta, solve_.beta, solve_.sigma,
                                parse_noise(solve_.noise), solve_sample_.seed,
                                to_direction(solve_sample_.direction));
      x = std::move(d.features);
      y = std::move(d.responses);
      truth = std::move(d.truth);
    }
    if (!solve_save_.empty()) save_data(solve_save_, x, y);
    t.metadata.emplace_back("p", std::to_string(x.rows()));
    t.metadata.emplace_back("n", std::to_string(x.cols()));

    if (solve_est_ == "ridge") {
      Eigen::VectorXd w;
      double lambda = 0.0;
      if (solve_lambda_) {
        lambda = *solve_lambda_;
        w = solve_ridge(x, y, lambda);
      } else {
        if (!truth) throw std::invalid_argument("--lambda is required with --data (no truth to tune against)");
        Dataset d;
        d.features = x;
        d.responses = y;
        d.truth = *truth;
        auto o = oracle_ridge(d);
        lambda = o.lambda;
        w = std::move(o.weights);
      }
      t.columns = {"lambda", "risk", "cosine", "weight_norm"};
      t.add_row({lambda, truth ? Cell{prediction_risk(w, *truth)} : Cell{},
                 truth ? cosine_similarity(w, *truth) : Cell{}, w.norm()});
      emit(t, out);
      return kExitOk;
    }

    const SolverConfig cfg = to_solver(solve_solver_);
    if (solve_.eps < 0.0) throw std::invalid_argument("eps must be >= 0");
    const SvrFit fit = solve_est_ == "hsvr" ? solve_hard_svr(x, y, solve_.eps, cfg)
                                            : solve_soft_svr(x, y, solve_.eps, solve_.cost, cfg);
    t.metadata.emplace_back("status", std::string(to_string(fit.status)));
    const bool ok = fit.status == FitStatus::converged;
    t.columns = {"converged",       "infeasible",          "iterations",
                 "risk",            "cosine",              "kkt_residual",
                 "constraint_violation", "duality_gap",    "primal_objective",
                 "dual_objective",  "weight_norm"};
    t.add_row({flag(ok), flag(fit.status == FitStatus::infeasible), static_cast<double>(fit.iterations),
               ok && truth ? Cell{prediction_risk(fit.weights, *truth)} : Cell{},
               ok && truth ? cosine_similarity(fit.weights, *truth) : Cell{}, fit.kkt_residual,
               fit.constraint_violation, fit.duality_gap, ok ? Cell{fit.primal_objective} : Cell{},
               fit.dual_objective, fit.weights.norm()});
    emit(t, out);
    if (fit.status == FitStatus::infeasible) {
      err << "infeasible: the dual is unbounded (no w fits every sample within eps)\n";
      return kExitInfeasible;
    }
    if (fit.status == FitStatus::max_iters) {
      err << "no convergence: iteration budget exhausted (gap " << format_number(fit.duality_gap) << ")\n";
      return kExitInfeasible;
    }
    return kExitOk;
  }

  // ------------------------------------------------------------ estimate
  void setup_estimate() {
    auto* sub = app_.add_subcommand("estimate", "noise-variance and signal-norm estimates (needs n > p)");
    sub->add_option("--data", est_sample_.data, "CSV file y,x1..xp (default: generated data)");
    add_sample_flags(sub, est_sample_);
    sub->add_option("--delta", est_.delta, "sample ratio n/p")->capture_default_str();
    sub->add_option("--sigma", est_.sigma, "noise scale")->capture_default_str();
    sub->add_option("--beta", est_.beta, "signal norm")->capture_default_str();
    sub->add_option("--noise", est_.noise, "gaussian | t<d>")->capture_default_str();
    sub->callback([this] {
      action_ = [this](std::ostream& out, std::ostream&) {
        Eigen::MatrixXd x;
        Eigen::VectorXd y;
        Table t = header();
        if (!est_sample_.data.empty()) {
          auto file = load_data(est_sample_.data);
          x = std::move(file.features);
          y = std::move(file.responses);
        } else {
          auto d = generate_dataset(est_sample_.p, est_.delta, est_.beta, est_.sigma, parse_noise(est_.noise),
                                    est_sample_.seed, to_direction(est_sample_.direction));
          x = std::move(d.features);
          y = std::move(d.responses);
        }
        if (x.cols() <= x.rows())
          throw UnsupportedRegimeError("n = " + std::to_string(x.cols()) + " <= p = " +
                                       std::to_string(x.rows()) +
                                       "; the residual projection is zero, so the noise level is not identified");
        const auto e = estimate_noise_signal(x, y);
        t.columns = {"n", "p", "sigma2", "beta2"};
        t.add_row({static_cast<double>(x.cols()), static_cast<double>(x.rows()), e.sigma2, e.beta2});
        emit(t, out);
        return kExitOk;
      };
    });
  }

  // ------------------------------------------------------------ sweep
  void setup_sweep() {
    auto* sub = app_.add_subcommand("sweep", "Monte Carlo sweep against the asymptotic prediction");
    sub->add_option("--estimator", sweep_est_, "hsvr | ssvr | ridge | null")
        ->check(CLI::IsMember({"hsvr", "ssvr", "ridge", "ridge_oracle", "null"}))
        ->capture_default_str();
    sub->add_option("--swept", sweep_swept_, "delta | eps | cost")
        ->check(CLI::IsMember({"delta", "eps", "cost"}))
        ->capture_default_str();
    sub->add_option("--grid", sweep_grid_, "values: a,b,c or lo:step:hi")->required();
    add_problem_flags(sub, sweep_, true, true);
    add_sample_flags(sub, sweep_sample_);
    sub->add_option("--trials", sweep_trials_, "seeds per grid point")->capture_default_str();
    sub->add_flag("--no-theory", sweep_no_theory_, "skip the asymptotic columns");
    sweep_solver_.tol = SweepSpec{}.solver.tol;
    add_solver_flags(sub, sweep_solver_);
    sub->callback([this] {
      action_ = [this](std::ostream& out, std::ostream&) {
        SweepSpec s;
        s.estimator = parse_estimator(sweep_est_);
        s.swept = parse_swept(sweep_swept_);
        s.grid = parse_grid(sweep_grid_);
        s.delta = sweep_.delta;
        s.sigma = sweep_.sigma;
        s.beta = sweep_.beta;
        s.eps = sweep_.eps;
        s.cost = sweep_.cost;
        s.noise = parse_noise(sweep_.noise);
        s.p = sweep_sample_.p;
        s.trials = sweep_trials_;
        s.base_seed = sweep_sample_.seed;
        s.theory = !sweep_no_theory_;
        s.direction = to_direction(sweep_sample_.direction);
        s.solver = to_solver(sweep_solver_);
        s.quad = quad_;
        s.threads = threads_;
        validate(s);
        Table t = header();
        t.columns = {std::string(to_string(s.swept)), "theory_risk", "theory_cosine", "mean_risk",
                     "stderr_risk", "mean_cosine", "feasibility_rate", "trials_used", "unconverged"};
        for (const auto& r : run_sweep(s))
          t.add_row({r.value, r.theory_risk, r.theory_cosine, r.mean_risk, r.stderr_risk, r.mean_cosine,
                     r.feasibility_rate, static_cast<double>(r.trials_used),
                     static_cast<double>(r.unconverged)});
        emit(t, out);
        return kExitOk;
      };
    });
  }

  // ------------------------------------------------------------ figure
  void setup_figure() {
    auto* sub = app_.add_subcommand("figure", "reproduce one figure as a table");
    std::string ids;
    for (const auto& id : figure_ids()) ids += (ids.empty() ? "" : ", ") + id;
    sub->add_option("id", fig_id_, "one of " + ids)->required();
    sub->add_option("--p", fig_.p, "dimension of the empirical runs")->capture_default_str();
    sub->add_option("--trials", fig_.trials, "seeds per empirical point")->capture_default_str();
    sub->add_option("--seed", fig_.seed, "base seed")->capture_default_str();
    sub->add_flag("--no-empirical", fig_no_empirical_, "theory columns only");
    fig_solver_.tol = FigureOptions{}.solver.tol;
    add_solver_flags(sub, fig_solver_);
    sub->callback([this] {
      action_ = [this](std::ostream& out, std::ostream&) {
        const auto& ids = figure_ids();
        if (std::find(ids.begin(), ids.end(), fig_id_) == ids.end())
          throw std::invalid_argument("unknown figure id '" + fig_id_ + "'");
        FigureOptions o = fig_;
        o.empirical = !fig_no_empirical_;
        o.threads = threads_;
        o.quad = quad_;
        o.solver = to_solver(fig_solver_);
        Table fig = make_figure(fig_id_, o);
        Table t = header();
        t.metadata.insert(t.metadata.end(), fig.metadata.begin(), fig.metadata.end());
        t.columns = std::move(fig.columns);
        t.rows = std::move(fig.rows);
        emit(t, out);
        return kExitOk;
      };
    });
  }

  CLI::App app_;
  Action action_;
  std::string command_line_;
  unsigned threads_ = 0;
  std::string output_;
  QuadratureSpec quad_;

  ProblemFlags ds_;
  std::string risk_est_;
  ProblemFlags risk_;
  std::string tune_est_;
  ProblemFlags tune_;
  std::string solve_est_;
  ProblemFlags solve_;
  SampleFlags solve_sample_;
  std::string solve_save_;
  std::optional<double> solve_lambda_;
  SolverFlags solve_solver_{};
  ProblemFlags est_;
  SampleFlags est_sample_;
  std::string sweep_est_ = "hsvr";
  std::string sweep_swept_ = "delta";
  std::string sweep_grid_;
  ProblemFlags sweep_;
  SampleFlags sweep_sample_;
  std::size_t sweep_trials_ = 20;
  bool sweep_no_theory_ = false;
  SolverFlags sweep_solver_{};
  std::string fig_id_;
  FigureOptions fig_;
  bool fig_no_empirical_ = false;
  SolverFlags fig_solver_{};
};

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream in(text);
    for (std::string piece; std::getline(in, piece, ':');) parts.push_back(parse_double(piece));
    if (parts.size() != 3 || !(parts[1] > 0.0) || parts[2] < parts[0])
      throw std::invalid_argument("range grid must be lo:step:hi with step > 0 and hi >= lo");
    const double n = std::floor((parts[2] - parts[0]) / parts[1] + 1e-9);
    if (n > 1e6) throw std::invalid_argument("range grid too long");
    for (int k = 0; k <= static_cast<int>(n); ++k) out.push_back(parts[0] + k * parts[1]);
    return out;
  }
  std::stringstream in(text);
  for (std::string piece; std::getline(in, piece, ',');) out.push_back(parse_double(piece));
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Tool tool;
  return tool.main(argc, argv, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"svrasym"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace svrasym::cli
