#pragma once

#include <vector>

namespace fracgrad {

/// Nodes and positive weights of a one-dimensional rule.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
  double weight_sum() const;
  /// Appends `other`, keeping nodes in increasing order when the supports are
  /// disjoint and `other` lies to the right.
  void append(const QuadratureRule& other);
};

/// n-point Gauss-Legendre rule on [-1, 1], nodes increasing.
QuadratureRule gauss_legendre(int n);

/// `panels` equal panels on [a, b], `n` Gauss-Legendre nodes each.
QuadratureRule composite_gauss_legendre(double a, double b, int panels, int n);

/// Rule on [a, b] graded toward `a`: panel breakpoints a + (b-a)(k/P)^q and
/// nodes mapped through s = a + (b-a) v^q from Gauss-Legendre nodes in v.
/// With integer q the Jacobian is polynomial, so weights sum to b - a up to
/// rounding, and integrands behaving like (s-a)^{beta} become smooth in v
/// once q (beta + 1) >= 2. With `levels` > 0 the first panel in v is split
/// geometrically toward 0 with ratio 1/4, which restores fast convergence
/// for integrands with a weak algebraic singularity left in v.
QuadratureRule graded_gauss_legendre(double a, double b, int panels, int n,
                                     int q, int levels = 0);

/// Same grading mirrored toward `b`.
QuadratureRule graded_gauss_legendre_upper(double a, double b, int panels,
                                           int n, int q);

/// Split at the midpoint and graded toward both endpoints. The node set is
/// symmetric: s is a node iff a + b - s is, with equal weight.
QuadratureRule two_sided_graded(double a, double b, int panels_per_half, int n,
                                int q, int levels = 0);

}  // namespace fracgrad
