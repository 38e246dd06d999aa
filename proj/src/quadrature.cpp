#include "svrasym/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace svrasym {

void validate(const QuadratureSpec& spec) {
  if (spec.gauss_nodes_G < 32)
    throw std::invalid_argument("quadrature: gauss_nodes_G must be >= 32, got " +
                                std::to_string(spec.gauss_nodes_G));
  if (spec.mixture_nodes < 16)
    throw std::invalid_argument("quadrature: mixture_nodes must be >= 16, got " +
                                std::to_string(spec.mixture_nodes));
  if (!(spec.abs_tol > 0.0) || spec.abs_tol > 1e-8)
    throw std::invalid_argument("quadrature: abs_tol must lie in (0, 1e-8]");
}

namespace {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix, weights are
// mu0 times the squared first eigenvector components.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag,
                            double mu0) {
  const Eigen::Index n = diag.size();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Golub-Welsch eigensolve failed");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()[i];
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_hermite_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite_rule: n must be positive");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(n > 1 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(static_cast<double>(k));
  return golub_welsch(diag, off, 1.0);
}

QuadratureRule gauss_jacobi_rule(int n, double alpha, double beta) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi_rule: n must be positive");
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw std::invalid_argument("gauss_jacobi_rule: exponents must exceed -1");
  const double ab = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(n > 1 ? n - 1 : 0);
  diag[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double two_k_ab = 2.0 * k + ab;
    diag[k] = (beta * beta - alpha * alpha) / (two_k_ab * (two_k_ab + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double two_k_ab = 2.0 * k + ab;
    double b;
    if (k == 1) {
      // closed form avoids 0/0 when alpha + beta = -1
      b = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
          (two_k_ab * two_k_ab * (two_k_ab + 1.0) * (two_k_ab - 1.0));
    }
    off[k - 1] = std::sqrt(b);
  }
  const double log_mu0 = (ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                         std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0);
  return golub_welsch(diag, off, std::exp(log_mu0));
}

}  // namespace svrasym
