#pragma once

#include <vector>

namespace svrasym {

/// Numerical integration settings for expectations over (G, N).
struct QuadratureSpec {
  /// Gauss-Hermite nodes for the G direction of the tensor (cross-check) route.
  int gauss_nodes_G = 64;
  /// Gauss-Jacobi nodes for the mixing variable of scale-mixture noise.
  int mixture_nodes = 96;
  /// Target absolute accuracy; also the tolerance of adaptive pieces.
  double abs_tol = 1e-10;
  /// Split piecewise integrands at their kinks (tensor route only).
  bool split_kinks = true;
};

/// Throws std::invalid_argument when gauss_nodes_G < 32, mixture_nodes < 16
/// or abs_tol is outside (0, 1e-8].
void validate(const QuadratureSpec& spec);

/// Nodes and weights of an interpolatory rule.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for the standard normal density (weights sum to 1).
QuadratureRule gauss_hermite_rule(int n);

/// Gauss-Jacobi rule on [-1, 1] for the weight (1 - t)^alpha (1 + t)^beta,
/// alpha, beta > -1. Built with the Golub-Welsch eigenvalue method.
QuadratureRule gauss_jacobi_rule(int n, double alpha, double beta);

/// Gauss-Legendre rule on [-1, 1].
inline QuadratureRule gauss_legendre_rule(int n) { return gauss_jacobi_rule(n, 0.0, 0.0); }

}  // namespace svrasym
