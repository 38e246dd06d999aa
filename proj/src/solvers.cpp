#include "svrasym/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace svrasym {

std::string_view to_string(FitStatus status) {
  switch (status) {
    case FitStatus::converged: return "converged";
    case FitStatus::infeasible: return "infeasible";
    case FitStatus::max_iters: return "max_iters";
  }
  return "unknown";
}

void validate(const SolverConfig& cfg) {
  if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be positive");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (!(cfg.backtrack_growth > 1.0)) throw std::invalid_argument("backtrack_growth must exceed 1");
  if (!(cfg.infeas_norm_factor > 0.0) || !std::isfinite(cfg.infeas_norm_factor))
    throw std::invalid_argument("infeas_norm_factor must be positive and finite");
  if (cfg.infeas_window < 1) throw std::invalid_argument("infeas_window must be positive");
  if (cfg.check_every < 1) throw std::invalid_argument("check_every must be positive");
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Minimizes F(u) = ||X u||^2/(2p) - y^T u / sqrt(p) + (eps/sqrt(p)) ||u||_1 over |u_i| <= box.
class DualProblem {
 public:
  DualProblem(const MatrixXd& X, const VectorXd& y, double eps, double box)
      : X_(X), y_(y), p_(static_cast<double>(X.rows())), sp_(std::sqrt(p_)),
        l1_(eps / sp_), box_(box) {}

  double smooth(const VectorXd& u, const VectorXd& Xu) const {
    return Xu.squaredNorm() / (2.0 * p_) - y_.dot(u) / sp_;
  }
  double nonsmooth(const VectorXd& u) const { return l1_ * u.lpNorm<1>(); }
  VectorXd gradient(const VectorXd& Xu) const {
    return (X_.transpose() * Xu) / p_ - y_ / sp_;
  }
  // prox of step * (l1 term + box indicator): soft threshold, then clip.
  VectorXd prox(const VectorXd& v, double step) const {
    const double k = step * l1_;
    VectorXd z(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double a = std::max(std::abs(v(i)) - k, 0.0);
      z(i) = std::copysign(std::min(a, box_), v(i));
    }
    return z;
  }

  double sp() const { return sp_; }
  double box() const { return box_; }

 private:
  const MatrixXd& X_;
  const VectorXd& y_;
  double p_;
  double sp_;
  double l1_;
  double box_;
};

struct Assessment {
  VectorXd weights;
  double violation = 0.0;
  double primal = 0.0;
  double dual = 0.0;
  double gap = 0.0;
  double kkt = 0.0;
};

class DualSolver {
 public:
  DualSolver(const MatrixXd& X, const VectorXd& y, double eps, double cost, bool hard,
             const SolverConfig& cfg)
      : X_(X), y_(y), eps_(eps), cost_(cost), hard_(hard), cfg_(cfg),
        p_(static_cast<double>(X.rows())), n_(static_cast<double>(X.cols())),
        prob_(X, y, eps, hard ? std::numeric_limits<double>::infinity() : cost / std::sqrt(p_)) {}

  SvrFit run();

 private:
  double objective(const VectorXd& u, const VectorXd& Xu) const {
    return prob_.smooth(u, Xu) + prob_.nonsmooth(u);
  }
  Assessment assess(const VectorXd& u, const VectorXd& Xu) const;
  bool accept(const Assessment& a) const {
    return a.gap <= cfg_.tol && (!hard_ || a.violation <= cfg_.tol);
  }
  std::optional<VectorXd> polish(const VectorXd& u) const;
  bool farkas_certificate(const VectorXd& u);

  const MatrixXd& X_;
  const VectorXd& y_;
  double eps_;
  double cost_;
  bool hard_;
  const SolverConfig& cfg_;
  double p_;
  double n_;
  DualProblem prob_;
  std::optional<Eigen::LLT<MatrixXd>> gram_;  // X X^T, built on first use
};

Assessment DualSolver::assess(const VectorXd& u, const VectorXd& Xu) const {
  Assessment a;
  a.weights = Xu / prob_.sp();
  const VectorXd r = y_ - X_.transpose() * a.weights;
  double hinge = 0.0;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    const double e = std::max(std::abs(r(i)) - eps_, 0.0);
    a.violation = std::max(a.violation, e);
    hinge += e;
  }
  a.primal = 0.5 * a.weights.squaredNorm() + (hard_ ? 0.0 : cost_ / p_ * hinge);
  a.dual = -objective(u, Xu);
  a.gap = std::abs(a.primal - a.dual) / std::max(1.0, std::abs(a.primal));
  // grad F(u) = -r / sqrt(p)
  a.kkt = (u - prob_.prox(u + r / prob_.sp(), 1.0)).lpNorm<Eigen::Infinity>();
  return a;
}

// Exact solve on the active set read off an approximate iterate: free coordinates sit on
// the tube boundary, r_i = eps sign(u_i); saturated ones stay at the box.
std::optional<VectorXd> DualSolver::polish(const VectorXd& u) const {
  const double box = prob_.box();
  std::vector<Eigen::Index> free, bound;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u(i) == 0.0) continue;
    if (!hard_ && std::abs(u(i)) >= box * (1.0 - 1e-12))
      bound.push_back(i);
    else
      free.push_back(i);
  }
  if (free.empty() || static_cast<double>(free.size()) > p_) return std::nullopt;
  const auto m = static_cast<Eigen::Index>(free.size());
  MatrixXd XF(X_.rows(), m);
  VectorXd rhs(m), sign(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    XF.col(k) = X_.col(free[static_cast<std::size_t>(k)]);
    sign(k) = u(free[static_cast<std::size_t>(k)]) > 0.0 ? 1.0 : -1.0;
    rhs(k) = prob_.sp() * (y_(free[static_cast<std::size_t>(k)]) - eps_ * sign(k));
  }
  VectorXd XB = VectorXd::Zero(X_.rows());
  for (Eigen::Index i : bound) XB += std::copysign(box, u(i)) * X_.col(i);
  rhs -= XF.transpose() * XB;
  const Eigen::LDLT<MatrixXd> ldlt(XF.transpose() * XF);
  if (ldlt.info() != Eigen::Success) return std::nullopt;
  const VectorXd uf = ldlt.solve(rhs);
  if (!uf.allFinite()) return std::nullopt;
  VectorXd out = VectorXd::Zero(u.size());
  for (Eigen::Index i : bound) out(i) = std::copysign(box, u(i));
  for (Eigen::Index k = 0; k < m; ++k) {
    if (uf(k) * sign(k) <= 0.0 || std::abs(uf(k)) > box) return std::nullopt;
    out(free[static_cast<std::size_t>(k)]) = uf(k);
  }
  return out;
}

// A direction d with X d = 0 and y^T d - eps ||d||_1 > 0 makes the dual unbounded and
// proves the primal constraints inconsistent. Test the projection of u onto null(X).
bool DualSolver::farkas_certificate(const VectorXd& u) {
  if (n_ <= p_) return false;
  if (!gram_) {
    gram_.emplace(X_ * X_.transpose());
    if (gram_->info() != Eigen::Success) return false;
  }
  const VectorXd d = u - X_.transpose() * gram_->solve(X_ * u);
  const double dn = d.norm();
  if (!(dn > 0.0)) return false;
  if ((X_ * d).norm() > 1e-9 * dn * std::sqrt(p_ + n_)) return false;
  const double value = y_.dot(d) - eps_ * d.lpNorm<1>();
  return value > 1e-8 * y_.norm() * dn;
}

SvrFit DualSolver::run() {
  VectorXd u = VectorXd::Zero(X_.cols());
  VectorXd Xu = VectorXd::Zero(X_.rows());
  VectorXd u_prev = u, Xu_prev = Xu;
  VectorXd v = u, Xv = Xu;
  double Fu = 0.0;
  double t = 1.0;
  double L = std::pow(1.0 + std::sqrt(n_ / p_), 2);

  SvrFit fit;
  std::vector<double> window(static_cast<std::size_t>(cfg_.infeas_window) + 1, 0.0);
  const double norm_cap = cfg_.infeas_norm_factor * std::sqrt(n_);
  std::vector<signed char> polished_pattern;
  double next_farkas_norm = 100.0 * std::sqrt(n_);

  // sign of each coordinate, doubled when it sits on the box
  const double box = prob_.box();
  auto pattern_of = [&](const VectorXd& x) {
    std::vector<signed char> s(static_cast<std::size_t>(x.size()));
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const int sg = (x(i) > 0.0) - (x(i) < 0.0);
      const bool on_box = !hard_ && std::abs(x(i)) >= box * (1.0 - 1e-12);
      s[static_cast<std::size_t>(i)] = static_cast<signed char>(on_box ? 2 * sg : sg);
    }
    return s;
  };
  int last_polish = 0;

  int k = 0;
  for (; k < cfg_.max_iters; ++k) {
    const VectorXd grad = prob_.gradient(Xv);
    const double fv = prob_.smooth(v, Xv);
    VectorXd z, Xz;
    double fz = 0.0;
    while (true) {
      z = prob_.prox(v - grad / L, 1.0 / L);
      Xz = X_ * z;
      fz = prob_.smooth(z, Xz);
      const VectorXd d = z - v;
      const double model = fv + grad.dot(d) + 0.5 * L * d.squaredNorm();
      if (fz <= model + 1e-12 * std::max(1.0, std::abs(fv))) break;
      L *= cfg_.backtrack_growth;
    }
    const double Fz = fz + prob_.nonsmooth(z);
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    if (Fz <= Fu) {
      u_prev.swap(u);
      Xu_prev.swap(Xu);
      u = std::move(z);
      Xu = std::move(Xz);
      Fu = Fz;
      const double b = (t - 1.0) / t_next;
      v = u + b * (u - u_prev);
      Xv = Xu + b * (Xu - Xu_prev);
      t = t_next;
    } else {
      // Momentum overshot: restart from the current (best) iterate.
      v = u;
      Xv = Xu;
      t = 1.0;
    }
    if (cfg_.record_trace) fit.dual_trace.push_back(-Fu);

    if (hard_) {
      const auto slot = static_cast<std::size_t>(k % static_cast<int>(window.size()));
      const double old = window[slot];
      window[slot] = Fu;
      const double un = u.norm();
      const bool rising = k >= cfg_.infeas_window && Fu < old;
      if (rising && (un > norm_cap || (un > next_farkas_norm && farkas_certificate(u)))) {
        fit.status = FitStatus::infeasible;
        ++k;
        break;
      }
      if (un > next_farkas_norm) next_farkas_norm = 2.0 * un;
    }

    if ((k + 1) % cfg_.check_every != 0) continue;
    const Assessment a = assess(u, Xu);
    if (accept(a)) {
      fit.status = FitStatus::converged;
      ++k;
      break;
    }
    if (a.gap < 1e-3) {
      auto pattern = pattern_of(u);
      // retry now and then even if nothing moved: the first attempt may have come too early
      if (pattern != polished_pattern || k - last_polish >= 50 * cfg_.check_every) {
        polished_pattern = std::move(pattern);
        last_polish = k;
        if (auto cand = polish(u)) {
          const VectorXd Xc = X_ * *cand;
          const double Fc = objective(*cand, Xc);
          if (Fc <= Fu + 1e-12 * std::max(1.0, std::abs(Fu)) && accept(assess(*cand, Xc))) {
            u = std::move(*cand);
            Xu = Xc;
            Fu = std::min(Fu, Fc);
            if (cfg_.record_trace) fit.dual_trace.back() = -Fu;
            fit.status = FitStatus::converged;
            ++k;
            break;
          }
        }
      }
    }
  }
  fit.iterations = k;
  const Assessment a = assess(u, Xu);
  if (fit.status == FitStatus::max_iters && accept(a)) fit.status = FitStatus::converged;
  fit.weights = a.weights;
  fit.constraint_violation = a.violation;
  fit.primal_objective = a.primal;
  fit.dual_objective = a.dual;
  fit.duality_gap = a.gap;
  fit.kkt_residual = a.kkt;
  fit.dual = std::move(u);
  return fit;
}

SvrFit solve_dual(const MatrixXd& X, const VectorXd& y, double eps, double cost, bool hard,
                  const SolverConfig& cfg) {
  validate(cfg);
  if (X.cols() != y.size()) throw std::invalid_argument("features and responses disagree on n");
  if (X.rows() < 1 || X.cols() < 1) throw std::invalid_argument("empty data");
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be nonnegative");
  if (!hard && !(cost > 0.0 && std::isfinite(cost)))
    throw std::invalid_argument("cost must be positive and finite");
  return DualSolver(X, y, eps, cost, hard, cfg).run();
}

}  // namespace

SvrFit solve_hard_svr(const Eigen::MatrixXd& features, const Eigen::VectorXd& responses, double eps,
                      const SolverConfig& cfg) {
  return solve_dual(features, responses, eps, 0.0, true, cfg);
}

SvrFit solve_hard_svr(const Dataset& data, double eps, const SolverConfig& cfg) {
  return solve_hard_svr(data.features, data.responses, eps, cfg);
}

SvrFit solve_soft_svr(const Eigen::MatrixXd& features, const Eigen::VectorXd& responses, double eps,
                      double cost, const SolverConfig& cfg) {
  return solve_dual(features, responses, eps, cost, false, cfg);
}

SvrFit solve_soft_svr(const Dataset& data, double eps, double cost, const SolverConfig& cfg) {
  return solve_soft_svr(data.features, data.responses, eps, cost, cfg);
}

}  // namespace svrasym
