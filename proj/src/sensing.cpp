#include "fracgrad/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fracgrad/errors.hpp"
#include "fracgrad/quadrature.hpp"

namespace fracgrad {

namespace {

constexpr int kNodesPerPanel = 8;

double interp_weight(const std::vector<double>& xs, double x, std::size_t& lo) {
  if (xs.size() == 1 || x <= xs.front()) {
    lo = 0;
    return 0.0;
  }
  if (x >= xs.back()) {
    lo = xs.size() - 2;
    return 1.0;
  }
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  lo = std::size_t(it - xs.begin()) - 1;
  return (x - xs[lo]) / (xs[lo + 1] - xs[lo]);
}

}  // namespace

Distribution Distribution::constant(double value) {
  return {[value](const Point&) { return value; }, 0};
}

Distribution Distribution::sine_product(double k1, double k2, double amplitude,
                                        int dimension) {
  const double pi = std::numbers::pi;
  const int osc = int(std::ceil(std::max(std::abs(k1), std::abs(k2))));
  if (dimension == 1) {
    return {[=](const Point& p) { return amplitude * std::sin(k1 * pi * p.x1); },
            osc};
  }
  return {[=](const Point& p) {
            return amplitude * std::sin(k1 * pi * p.x1) * std::sin(k2 * pi * p.x2);
          },
          osc};
}

Distribution Distribution::mode_shape(const Mode& mode) {
  return {[mode](const Point& p) { return mode.value(p); }, mode.max_index()};
}

Distribution Distribution::tabulated(std::vector<double> x1,
                                     std::vector<double> x2,
                                     std::vector<std::vector<double>> values) {
  if (x1.empty() || values.size() != x1.size()) {
    throw DomainError("tabulated distribution: x1 and values disagree");
  }
  if (x2.empty()) x2 = {0.0};
  for (const auto& row : values) {
    if (row.size() != x2.size()) {
      throw DomainError("tabulated distribution: ragged value table");
    }
  }
  if (!std::is_sorted(x1.begin(), x1.end()) ||
      !std::is_sorted(x2.begin(), x2.end())) {
    throw DomainError("tabulated distribution: axes must be increasing");
  }
  // resolution follows the table spacing
  const int osc = int(std::max(x1.size(), x2.size()));
  return {[x1 = std::move(x1), x2 = std::move(x2),
           values = std::move(values)](const Point& p) {
            std::size_t a = 0, b = 0;
            const double u = interp_weight(x1, p.x1, a);
            const double v = x2.size() > 1 ? interp_weight(x2, p.x2, b) : 0.0;
            const std::size_t a1 = std::min(a + 1, x1.size() - 1);
            const std::size_t b1 = std::min(b + 1, x2.size() - 1);
            return (1 - u) * (1 - v) * values[a][b] + u * (1 - v) * values[a1][b] +
                   (1 - u) * v * values[a][b1] + u * v * values[a1][b1];
          },
          osc};
}

Sensor Sensor::zone(Box support, Distribution f, int dimension) {
  // validates containment
  (void)Region(dimension, {support});
  if (!f.fn) throw DomainError("zone sensor: missing distribution");
  Sensor s;
  s.kind_ = SensorKind::zone;
  s.dimension_ = dimension;
  s.support_ = Region(dimension, {support}).boxes().front();
  s.f_ = std::move(f);
  return s;
}

Sensor Sensor::pointwise(Point location, int dimension) {
  const bool ok = location.x1 >= 0.0 && location.x1 <= 1.0 &&
                  (dimension == 1 || (location.x2 >= 0.0 && location.x2 <= 1.0));
  if (!ok || (dimension != 1 && dimension != 2)) {
    throw DomainError("pointwise sensor: location outside the closed domain");
  }
  Sensor s;
  s.kind_ = SensorKind::pointwise;
  s.dimension_ = dimension;
  s.location_ = location;
  if (dimension == 1) s.location_.x2 = 0.0;
  return s;
}

Sensor Sensor::filament(Segment segment, Distribution f) {
  if (segment.fixed_axis != 0 && segment.fixed_axis != 1) {
    throw DomainError("filament sensor: fixed axis must be 0 or 1");
  }
  if (!(segment.fixed_value >= 0.0 && segment.fixed_value <= 1.0 &&
        segment.t1 >= 0.0 && segment.t2 <= 1.0 && segment.t1 < segment.t2)) {
    throw DomainError("filament sensor: segment outside the closed domain");
  }
  if (!f.fn) throw DomainError("filament sensor: missing distribution");
  Sensor s;
  s.kind_ = SensorKind::filament;
  s.dimension_ = 2;
  s.segment_ = segment;
  s.f_ = std::move(f);
  return s;
}

SensorSuite::SensorSuite(std::vector<Sensor> sensors)
    : sensors_(std::move(sensors)) {
  if (sensors_.empty()) throw DomainError("sensor suite: no sensors");
  for (const Sensor& s : sensors_) {
    if (s.dimension() != sensors_.front().dimension()) {
      throw DomainError("sensor suite: mixed dimensions");
    }
  }
}

namespace {

// Pairs the sensor's distribution with `shape`, a function of the point.
template <typename Shape>
double pair_with(const Sensor& sensor, int index, Shape&& shape) {
  switch (sensor.kind()) {
    case SensorKind::pointwise:
      return shape(sensor.location());
    case SensorKind::zone: {
      const int res = std::max(index, sensor.distribution().oscillation);
      const QuadGrid grid =
          region_grid(Region(sensor.dimension(), {sensor.support()}), res);
      double s = 0.0;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        s += grid.weights[k] * sensor.distribution()(grid.nodes[k]) *
             shape(grid.nodes[k]);
      }
      return s;
    }
    case SensorKind::filament: {
      const Segment& seg = sensor.segment();
      const int res = std::max(index, sensor.distribution().oscillation);
      const QuadratureRule r = composite_gauss_legendre(
          seg.t1, seg.t2, panels_for_index(res), kNodesPerPanel);
      double s = 0.0;
      for (std::size_t k = 0; k < r.size(); ++k) {
        const Point p = seg.at(r.nodes[k]);
        s += r.weights[k] * sensor.distribution()(p) * shape(p);
      }
      return s;
    }
  }
  return 0.0;
}

}  // namespace

double coupling(const Sensor& sensor, const Mode& mode) {
  return pair_with(sensor, mode.max_index(),
                   [&](const Point& p) { return mode.value(p); });
}

double grad_coupling(const Sensor& sensor, const Mode& mode, int axis) {
  if (axis < 0 || axis >= sensor.dimension()) {
    throw DomainError("grad_coupling: axis out of range");
  }
  return pair_with(sensor, mode.max_index(),
                   [&](const Point& p) { return mode.gradient(p)[axis]; });
}

Eigen::MatrixXd coupling_matrix(const SensorSuite& suite, const Basis& basis) {
  if (suite.dimension() != basis.dimension()) {
    throw DomainError("coupling_matrix: suite and basis dimensions differ");
  }
  Eigen::MatrixXd k(Eigen::Index(suite.size()), Eigen::Index(basis.size()));
  for (std::size_t i = 0; i < suite.size(); ++i) {
    for (std::size_t m = 0; m < basis.size(); ++m) {
      k(Eigen::Index(i), Eigen::Index(m)) = coupling(suite[i], basis.modes()[m]);
    }
  }
  return k;
}

Eigen::VectorXd observe(const SpectralField& state,
                        const Eigen::MatrixXd& couplings) {
  const Eigen::VectorXd& c = state.coefficients();
  Eigen::VectorXd z(couplings.rows());
  // fixed summation order over modes
  for (Eigen::Index i = 0; i < couplings.rows(); ++i) {
    double s = 0.0;
    for (Eigen::Index m = 0; m < c.size(); ++m) s += couplings(i, m) * c[m];
    z[i] = s;
  }
  return z;
}

Eigen::VectorXd observe(const SpectralField& state, const SensorSuite& suite) {
  return observe(state, coupling_matrix(suite, *state.basis()));
}

SpectralField adjoint_inject(const Eigen::VectorXd& z, const SensorSuite& suite,
                             BasisPtr basis) {
  if (std::size_t(z.size()) != suite.size()) {
    throw DomainError("adjoint_inject: channel count mismatch");
  }
  const Eigen::MatrixXd k = coupling_matrix(suite, *basis);
  Eigen::VectorXd c(k.cols());
  for (Eigen::Index m = 0; m < k.cols(); ++m) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < k.rows(); ++i) s += z[i] * k(i, m);
    c[m] = s;
  }
  return SpectralField(std::move(basis), std::move(c));
}

}  // namespace fracgrad
