#pragma once

// Sensor models and the output operator C with its spectral adjoint.

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "fracgrad/spectral.hpp"

namespace fracgrad {

/// Spatial distribution f of a zone or filament sensor.
struct Distribution {
  ScalarFn fn;
  /// Highest wavenumber-like index of f; raises the quadrature resolution.
  int oscillation = 0;

  double operator()(const Point& p) const { return fn(p); }

  static Distribution constant(double value);
  /// amplitude * sin(k1 pi x1) [* sin(k2 pi x2) in 2-D]; k may be irrational.
  static Distribution sine_product(double k1, double k2, double amplitude,
                                   int dimension);
  /// The eigenfunction xi_mode itself.
  static Distribution mode_shape(const Mode& mode);
  /// Piecewise-bilinear (piecewise-linear in 1-D) interpolant of a table on a
  /// tensor grid; values[a][b] sits at (x1[a], x2[b]). Constant extrapolation.
  static Distribution tabulated(std::vector<double> x1, std::vector<double> x2,
                                std::vector<std::vector<double>> values);
};

enum class SensorKind { zone, pointwise, filament };

/// Segment {fixed_value} x [t1, t2] (fixed_axis = 0) or [t1, t2] x
/// {fixed_value} (fixed_axis = 1).
struct Segment {
  int fixed_axis = 1;
  double fixed_value = 0.5;
  double t1 = 0.0;
  double t2 = 1.0;

  Point at(double t) const noexcept {
    return fixed_axis == 0 ? Point{fixed_value, t} : Point{t, fixed_value};
  }
};

class Sensor {
 public:
  static Sensor zone(Box support, Distribution f, int dimension);
  static Sensor pointwise(Point location, int dimension);
  static Sensor filament(Segment segment, Distribution f);

  SensorKind kind() const noexcept { return kind_; }
  int dimension() const noexcept { return dimension_; }
  const Box& support() const noexcept { return support_; }
  const Point& location() const noexcept { return location_; }
  const Segment& segment() const noexcept { return segment_; }
  const Distribution& distribution() const noexcept { return f_; }

 private:
  SensorKind kind_ = SensorKind::pointwise;
  int dimension_ = 1;
  Box support_{};
  Point location_{};
  Segment segment_{};
  Distribution f_{};
};

class SensorSuite {
 public:
  /// Throws DomainError if empty or if sensor dimensions disagree.
  explicit SensorSuite(std::vector<Sensor> sensors);

  std::size_t size() const noexcept { return sensors_.size(); }
  int dimension() const noexcept { return sensors_.front().dimension(); }
  const Sensor& operator[](std::size_t i) const { return sensors_[i]; }
  const std::vector<Sensor>& sensors() const noexcept { return sensors_; }

 private:
  std::vector<Sensor> sensors_;
};

/// (f, xi_mode) on D, xi_mode(sigma), or the line integral along a filament.
double coupling(const Sensor& sensor, const Mode& mode);

/// Same pairing against d(xi_mode)/dx_s, axis s in {0, 1}.
double grad_coupling(const Sensor& sensor, const Mode& mode, int axis);

/// p x n matrix of couplings, column k for basis mode k.
Eigen::MatrixXd coupling_matrix(const SensorSuite& suite, const Basis& basis);

/// Channel outputs C y for a state given by its coefficients.
Eigen::VectorXd observe(const SpectralField& state, const SensorSuite& suite);
Eigen::VectorXd observe(const SpectralField& state,
                        const Eigen::MatrixXd& couplings);

/// Spectral coefficients of C* z.
SpectralField adjoint_inject(const Eigen::VectorXd& z, const SensorSuite& suite,
                             BasisPtr basis);

}  // namespace fracgrad
