#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracgrad/errors.hpp"
#include "fracgrad/sensing.hpp"

using namespace fracgrad;

namespace {

constexpr double kPi = std::numbers::pi;

Sensor counterexample_filament() {
  return Sensor::filament(Segment{0, 0.5, 0.0, 1.0},
                          Distribution::sine_product(1.0, 1.0, 1.0, 2));
}

// Midpoint rule on a fine tensor grid, independent of the library quadrature.
double midpoint_2d(const std::function<double(double, double)>& f, double a1, double b1,
                   double a2, double b2, int n) {
  const double h1 = (b1 - a1) / n, h2 = (b2 - a2) / n;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s += f(a1 + (i + 0.5) * h1, a2 + (j + 0.5) * h2);
  }
  return s * h1 * h2;
}

}  // namespace

TEST_CASE("zone sensor with an eigenfunction profile") {
  const Sensor s = Sensor::zone(Box{}, Distribution::mode_shape({1, 1}), 2);
  CHECK(coupling(s, {1, 1}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(coupling(s, {2, 1})) < 1e-12);
}

TEST_CASE("pointwise sensor evaluates the mode") {
  const Sensor s = Sensor::pointwise({0.5, 0.5}, 2);
  CHECK(std::abs(coupling(s, {1, 2})) < 1e-15);
  CHECK(coupling(s, {1, 1}) == doctest::Approx(2.0));
}

TEST_CASE("the counterexample filament couples only to j = 1") {
  const Sensor s = counterexample_filament();
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const double want = j == 1 ? std::sin(i * kPi / 2) : 0.0;
      CAPTURE(i);
      CAPTURE(j);
      CHECK(std::abs(coupling(s, {i, j}) - want) < 1e-12);
    }
  }
}

TEST_CASE("gradient couplings of a 1-D pointwise sensor") {
  const Sensor s = Sensor::pointwise({0.5, 0.0}, 1);
  CHECK(std::abs(grad_coupling(s, {1, 0}, 0)) < 1e-14);
  CHECK(grad_coupling(s, {2, 0}, 0) == doctest::Approx(-2 * std::sqrt(2.0) * kPi));
  const Sensor t = Sensor::pointwise({1.0 / kPi, 0.0}, 1);
  for (int j = 1; j <= 5; ++j) {
    CHECK(grad_coupling(t, {j, 0}, 0) ==
          doctest::Approx(std::sqrt(2.0) * j * kPi * std::cos(j)).epsilon(1e-13));
  }
}

TEST_CASE("zone gradient couplings match an independent quadrature") {
  const double k = std::sqrt(2.0);
  const Sensor s = Sensor::zone(Box{{0.2, 0.3}, {0.6, 0.7}},
                                Distribution::sine_product(k, k, 1.0, 2), 2);
  for (const Mode m : {Mode{1, 1}, Mode{2, 3}, Mode{3, 2}}) {
    auto f = [&](double x1, double x2) { return std::sin(k * kPi * x1) * std::sin(k * kPi * x2); };
    const double b1 = midpoint_2d([&](double x1, double x2) {
      return f(x1, x2) * 2 * m.i * kPi * std::cos(m.i * kPi * x1) * std::sin(m.j * kPi * x2);
    }, 0.2, 0.6, 0.3, 0.7, 800);
    const double b2 = midpoint_2d([&](double x1, double x2) {
      return f(x1, x2) * 2 * m.j * kPi * std::sin(m.i * kPi * x1) * std::cos(m.j * kPi * x2);
    }, 0.2, 0.6, 0.3, 0.7, 800);
    CHECK(grad_coupling(s, m, 0) == doctest::Approx(b1).epsilon(1e-5));
    CHECK(grad_coupling(s, m, 1) == doctest::Approx(b2).epsilon(1e-5));
  }
}

TEST_CASE("filament gradient couplings") {
  const Segment seg{1, 0.4, 0.1, 0.9};
  const Sensor s = Sensor::filament(seg, Distribution::constant(1.0));
  const Mode m{2, 3};
  const double want = 2 * 2 * kPi * std::sin(3 * kPi * 0.4) *
                      (std::sin(2 * kPi * 0.9) - std::sin(2 * kPi * 0.1)) / (2 * kPi);
  CHECK(grad_coupling(s, m, 0) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("observe and adjoint_inject") {
  const BasisPtr b = build_basis(2, 3);
  const SensorSuite one({Sensor::zone(Box{}, Distribution::mode_shape({1, 1}), 2)});
  Eigen::VectorXd c = Eigen::VectorXd::Zero(Eigen::Index(b->size()));
  c[Eigen::Index(b->index_of({1, 1}))] = 1.0;
  CHECK(observe(SpectralField(b, c), one)[0] == doctest::Approx(1.0));
  CHECK(observe(SpectralField::zero(b), one).norm() == 0.0);

  const SensorSuite suite({counterexample_filament()});
  Eigen::VectorXd d = Eigen::VectorXd::Zero(Eigen::Index(b->size()));
  d[Eigen::Index(b->index_of({1, 3}))] = 5.0;
  CHECK(std::abs(observe(SpectralField(b, d), suite)[0]) < 1e-12);

  const SpectralField inj = adjoint_inject(Eigen::VectorXd::Ones(1), one, b);
  CHECK((inj.coefficients() - c).norm() < 1e-12);
  CHECK(adjoint_inject(Eigen::VectorXd::Zero(1), one, b).coefficients().norm() == 0.0);
}

TEST_CASE("adjoint_inject is the transpose of observe") {
  const BasisPtr b = build_basis(2, 4);
  const SensorSuite suite({Sensor::pointwise({0.31, 0.77}, 2),
                           Sensor::zone(Box{{0.1, 0.1}, {0.5, 0.4}},
                                        Distribution::sine_product(1.3, 2.1, 0.7, 2), 2),
                           Sensor::filament(Segment{0, 0.62, 0.2, 0.8},
                                            Distribution::constant(1.5))});
  Eigen::VectorXd c(Eigen::Index(b->size()));
  for (Eigen::Index k = 0; k < c.size(); ++k) c[k] = std::sin(0.9 * double(k) + 0.2);
  const Eigen::Vector3d z(0.4, -1.1, 2.0);
  const double lhs = observe(SpectralField(b, c), suite).dot(z);
  const double rhs = adjoint_inject(z, suite, b).coefficients().dot(c);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("tabulated distributions interpolate bilinearly") {
  const Distribution d = Distribution::tabulated({0.0, 1.0}, {0.0, 1.0}, {{0.0, 1.0}, {2.0, 3.0}});
  CHECK(d({0.5, 0.5}) == doctest::Approx(1.5));
  CHECK(d({0.25, 1.0}) == doctest::Approx(1.5));
  CHECK(d({2.0, 2.0}) == doctest::Approx(3.0));
}

TEST_CASE("invalid sensors are rejected") {
  CHECK_THROWS_AS(Sensor::pointwise({1.5, 0.5}, 2), DomainError);
  CHECK_THROWS_AS(Sensor::filament(Segment{0, 0.5, 0.8, 0.2}, Distribution::constant(1.0)),
                  DomainError);
  CHECK_THROWS_AS(SensorSuite(std::vector<Sensor>{}), DomainError);
  CHECK_THROWS_AS(SensorSuite({Sensor::pointwise({0.5, 0.0}, 1), Sensor::pointwise({0.5, 0.5}, 2)}),
                  DomainError);
}
