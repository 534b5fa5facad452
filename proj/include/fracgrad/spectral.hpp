#pragma once

// Dirichlet-Laplacian eigenbasis on [0,1] and [0,1]^2, regions made of
// axis-aligned boxes, tensor Gauss-Legendre grids, and the gradient /
// adjoint-gradient pair acting on eigen-expansions.

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace fracgrad {

/// A point of the domain; x2 is ignored in one dimension.
struct Point {
  double x1 = 0.0;
  double x2 = 0.0;
};

using Vec2 = std::array<double, 2>;
using ScalarFn = std::function<double(const Point&)>;
using VectorFn = std::function<Vec2(const Point&)>;

/// Eigenmode index: (i) in 1-D (stored with j = 0) or (i, j) in 2-D.
struct Mode {
  int i = 1;
  int j = 0;

  int dimension() const noexcept { return j == 0 ? 1 : 2; }
  int max_index() const noexcept { return i > j ? i : j; }
  /// -(i^2 + j^2) pi^2
  double eigenvalue() const noexcept;
  /// sqrt(2) sin(i pi x) or 2 sin(i pi x1) sin(j pi x2)
  double value(const Point& p) const noexcept;
  /// Exact partial derivatives; component 1 is zero in 1-D.
  Vec2 gradient(const Point& p) const noexcept;

  friend bool operator==(const Mode&, const Mode&) = default;
};

struct EigenGroup {
  double eigenvalue = 0.0;
  std::vector<std::size_t> members;  ///< indices into Basis::modes()
  int multiplicity() const noexcept { return static_cast<int>(members.size()); }
};

class Basis {
 public:
  static constexpr std::size_t kMaxModes = 10000;

  int dimension() const noexcept { return dimension_; }
  int truncation() const noexcept { return truncation_; }
  std::size_t size() const noexcept { return modes_.size(); }
  const std::vector<Mode>& modes() const noexcept { return modes_; }
  const std::vector<EigenGroup>& groups() const noexcept { return groups_; }
  /// Group index of each mode.
  const std::vector<std::size_t>& group_of() const noexcept { return group_of_; }
  /// Position of `m` in modes(), or size() if absent.
  std::size_t index_of(const Mode& m) const noexcept;

 private:
  friend std::shared_ptr<const Basis> build_basis(int dimension, int truncation);
  int dimension_ = 1;
  int truncation_ = 1;
  std::vector<Mode> modes_;
  std::vector<EigenGroup> groups_;
  std::vector<std::size_t> group_of_;
};

using BasisPtr = std::shared_ptr<const Basis>;

/// All modes with indices <= truncation, ordered by eigenvalue group
/// (decreasing eigenvalue), members of a group in lexicographic order.
/// Throws DomainError for a bad dimension or truncation < 1, and when more
/// than Basis::kMaxModes modes would be produced.
BasisPtr build_basis(int dimension, int truncation);

/// Closed axis-aligned box; in 1-D only the first axis is used.
struct Box {
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{1.0, 1.0};

  bool contains(const Point& p, int dimension) const noexcept;
  double measure(int dimension) const noexcept;
};

/// Finite union of pairwise-disjoint boxes contained in the unit domain.
class Region {
 public:
  /// Validates containment, positive measure and disjoint interiors; throws
  /// DomainError otherwise.
  Region(int dimension, std::vector<Box> boxes);
  static Region whole(int dimension);

  int dimension() const noexcept { return dimension_; }
  const std::vector<Box>& boxes() const noexcept { return boxes_; }
  bool contains(const Point& p) const noexcept;
  double measure() const noexcept;
  bool is_whole() const noexcept;

 private:
  int dimension_;
  std::vector<Box> boxes_;
};

/// Tensor quadrature over a union of cells. `inside` flags cells lying in a
/// reference region (all true for plain region grids).
struct QuadGrid {
  int dimension = 1;
  std::vector<Point> nodes;
  std::vector<double> weights;
  std::vector<char> inside;

  std::size_t size() const noexcept { return nodes.size(); }
  double weight_sum() const;
};

/// Panels per unit length needed to resolve modes up to `max_index`.
int panels_for_index(int max_index);

/// Composite tensor Gauss-Legendre (8 nodes/panel) over each box of `region`
/// with max(4, 2 max_index) panels per axis.
QuadGrid region_grid(const Region& region, int max_index);

/// Grid over the whole domain whose cells are cut at every box edge of
/// `region`, so masking by the region is exact. Node flags mark cells inside.
QuadGrid aligned_grid(const Region& region, int max_index);

/// Gradient-type field sampled on a grid: `components[s][k]` is component s at
/// node k.
struct VectorFieldSamples {
  QuadGrid grid;
  std::vector<std::vector<double>> components;

  int dimension() const noexcept { return grid.dimension; }
  /// (g, g) in (L^2)^n by the grid's quadrature.
  double squared_norm() const;
};

VectorFieldSamples sample(const VectorFn& g, const QuadGrid& grid);

/// Coefficients of a scalar field on an eigenbasis.
class SpectralField {
 public:
  SpectralField(BasisPtr basis, Eigen::VectorXd coefficients);
  static SpectralField zero(BasisPtr basis);

  const BasisPtr& basis() const noexcept { return basis_; }
  const Eigen::VectorXd& coefficients() const noexcept { return coeffs_; }
  double coefficient(const Mode& m) const;
  double l2_norm() const { return coeffs_.norm(); }
  double evaluate(const Point& p) const;
  Vec2 gradient(const Point& p) const;

 private:
  BasisPtr basis_;
  Eigen::VectorXd coeffs_;
};

/// int_region f xi_mode dx with max(4, 2 max(mode index, extra_index)) panels.
double inner_product(const ScalarFn& f, const Mode& mode, const Region& region,
                     int extra_index = 0);

/// Projection of f on every mode of the basis (over the whole domain).
SpectralField project(const ScalarFn& f, BasisPtr basis, int extra_index = 0);

/// Analytic gradients of `mode` at each point.
std::vector<Vec2> grad_eval(const Mode& mode, std::span<const Point> points);

/// Spectral realisation of the adjoint gradient (minus divergence with zero
/// Dirichlet data): coefficient q is sum_s int g_s d(xi_q)/dx_s.
SpectralField grad_adjoint(const VectorFieldSamples& g, BasisPtr basis);

/// p_omega on samples: zero every node outside `region`.
VectorFieldSamples restrict_to(const VectorFieldSamples& g, const Region& region);
/// p_omega on closed-form fields: the field masked to the region.
VectorFn restrict_to(VectorFn g, const Region& region);
ScalarFn restrict_to(ScalarFn f, const Region& region);
/// p*_omega: zero extension of a field living on the region.
VectorFn extend_by_zero(VectorFn g, const Region& region);

}  // namespace fracgrad
