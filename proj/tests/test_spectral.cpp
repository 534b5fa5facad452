#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracgrad/errors.hpp"
#include "fracgrad/spectral.hpp"

using namespace fracgrad;

namespace {

constexpr double kPi = std::numbers::pi;

Vec2 counterexample_g(const Point& p) {
  return {std::cos(kPi * p.x1) * std::sin(3 * kPi * p.x2) / kPi,
          3.0 * std::sin(kPi * p.x1) * std::cos(3 * kPi * p.x2) / kPi};
}

}  // namespace

TEST_CASE("eigenvalue groups in two dimensions") {
  const BasisPtr b = build_basis(2, 2);
  REQUIRE(b->groups().size() == 3);
  CHECK(b->groups()[0].eigenvalue == doctest::Approx(-2 * kPi * kPi));
  CHECK(b->groups()[0].multiplicity() == 1);
  CHECK(b->groups()[1].eigenvalue == doctest::Approx(-5 * kPi * kPi));
  CHECK(b->groups()[1].multiplicity() == 2);
  CHECK(b->groups()[2].eigenvalue == doctest::Approx(-8 * kPi * kPi));
  CHECK(b->groups()[2].multiplicity() == 1);
}

TEST_CASE("one-dimensional groups are simple") {
  const BasisPtr b = build_basis(1, 3);
  REQUIRE(b->groups().size() == 3);
  for (const auto& g : b->groups()) CHECK(g.multiplicity() == 1);
}

TEST_CASE("the 65 pi^2 group at M=8 has four members") {
  const BasisPtr b = build_basis(2, 8);
  bool found = false;
  for (const auto& g : b->groups()) {
    if (std::abs(g.eigenvalue + 65 * kPi * kPi) > 1e-9) continue;
    found = true;
    REQUIRE(g.multiplicity() == 4);
    std::vector<Mode> members;
    for (std::size_t m : g.members) members.push_back(b->modes()[m]);
    CHECK(members == std::vector<Mode>{{1, 8}, {4, 7}, {7, 4}, {8, 1}});
  }
  CHECK(found);
}

TEST_CASE("basis invariants") {
  for (int d : {1, 2}) {
    for (int m : {1, 3, 6}) {
      const BasisPtr b = build_basis(d, m);
      CHECK(b->size() == std::size_t(d == 1 ? m : m * m));
      std::size_t total = 0;
      for (std::size_t g = 0; g < b->groups().size(); ++g) {
        total += b->groups()[g].members.size();
        if (g) CHECK(b->groups()[g].eigenvalue < b->groups()[g - 1].eigenvalue);
        for (std::size_t k : b->groups()[g].members) {
          CHECK(b->modes()[k].eigenvalue() == doctest::Approx(b->groups()[g].eigenvalue));
          CHECK(b->group_of()[k] == g);
        }
      }
      CHECK(total == b->size());
      for (std::size_t k = 0; k < b->size(); ++k) CHECK(b->index_of(b->modes()[k]) == k);
    }
  }
  CHECK_THROWS_AS(build_basis(3, 2), DomainError);
  CHECK_THROWS_AS(build_basis(2, 0), DomainError);
  CHECK_THROWS_AS(build_basis(2, 101), DomainError);
}

TEST_CASE("orthonormality through inner_product") {
  const Region whole = Region::whole(2);
  const Mode m11{1, 1}, m12{1, 2};
  auto xi11 = [&](const Point& p) { return m11.value(p); };
  auto xi12 = [&](const Point& p) { return m12.value(p); };
  CHECK(inner_product(xi11, m11, whole) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(inner_product(xi12, m11, whole)) < 1e-10);
  const BasisPtr b = build_basis(2, 4);
  for (const Mode& a : b->modes()) {
    for (const Mode& c : b->modes()) {
      const double v = inner_product([&](const Point& p) { return a.value(p); }, c, whole);
      CHECK(std::abs(v - (a == c ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("analytic gradients") {
  const std::vector<Point> pts{{0.5, 0.5}};
  const Vec2 g = grad_eval(Mode{1, 1}, pts)[0];
  CHECK(std::abs(g[0]) < 1e-15);
  CHECK(std::abs(g[1]) < 1e-15);
  const std::vector<Point> origin{{0.0, 0.0}};
  CHECK(grad_eval(Mode{2, 0}, origin)[0][0] ==
        doctest::Approx(std::sqrt(2.0) * 2 * kPi).epsilon(1e-14));
  const Mode m{2, 3};
  const Point p{0.3, 0.7};
  const double h = 1e-6;
  CHECK(m.gradient(p)[0] == doctest::Approx((m.value({p.x1 + h, p.x2}) -
                                             m.value({p.x1 - h, p.x2})) / (2 * h)).epsilon(1e-8));
  CHECK(m.gradient(p)[1] == doctest::Approx((m.value({p.x1, p.x2 + h}) -
                                             m.value({p.x1, p.x2 - h})) / (2 * h)).epsilon(1e-8));
}

TEST_CASE("adjoint gradient of the counterexample field") {
  const BasisPtr b = build_basis(2, 4);
  const SpectralField f = grad_adjoint(sample(counterexample_g, region_grid(Region::whole(2), 4)), b);
  for (const Mode& m : b->modes()) {
    const double want = (m == Mode{1, 3}) ? 5.0 : 0.0;
    CAPTURE(m.i);
    CAPTURE(m.j);
    CHECK(std::abs(f.coefficient(m) - want) < 1e-9);
  }
}

TEST_CASE("adjoint gradient inverts -Laplacian on modes") {
  const BasisPtr b = build_basis(2, 3);
  const Mode m11{1, 1};
  const SpectralField f = grad_adjoint(
      sample([&](const Point& p) { return m11.gradient(p); }, region_grid(Region::whole(2), 3)), b);
  CHECK(f.coefficient(m11) == doctest::Approx(2 * kPi * kPi).epsilon(1e-12));
  CHECK(f.coefficients().norm() == doctest::Approx(2 * kPi * kPi).epsilon(1e-12));
  const SpectralField z = grad_adjoint(
      sample([](const Point&) { return Vec2{0.0, 0.0}; }, region_grid(Region::whole(2), 3)), b);
  CHECK(z.coefficients().norm() == 0.0);
}

TEST_CASE("adjoint identity (g, grad y) = (grad* g, y)") {
  const BasisPtr b = build_basis(2, 5);
  const QuadGrid grid = region_grid(Region::whole(2), 5);
  auto g = [](const Point& p) {
    return Vec2{p.x1 * p.x2 * (1 - p.x2) + 0.3, std::sin(2 * p.x1) * p.x2};
  };
  const SpectralField adj = grad_adjoint(sample(g, grid), b);
  Eigen::VectorXd c(Eigen::Index(b->size()));
  for (Eigen::Index k = 0; k < c.size(); ++k) c[k] = std::cos(1.7 * double(k));
  const SpectralField y(b, c);
  double lhs = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Vec2 gv = g(grid.nodes[k]);
    const Vec2 dy = y.gradient(grid.nodes[k]);
    lhs += grid.weights[k] * (gv[0] * dy[0] + gv[1] * dy[1]);
  }
  CHECK(lhs == doctest::Approx(adj.coefficients().dot(c)).epsilon(1e-12));
}

TEST_CASE("restriction") {
  const Region strip(2, {Box{{0.0, 0.0}, {1.0, 1.0 / 6.0}}});
  const VectorFieldSamples one =
      sample([](const Point&) { return Vec2{1.0, 0.0}; }, aligned_grid(strip, 2));
  CHECK(restrict_to(one, strip).squared_norm() == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
  const Region whole = Region::whole(2);
  const VectorFieldSamples g = sample(counterexample_g, region_grid(whole, 3));
  const VectorFieldSamples r = restrict_to(g, whole);
  CHECK(r.components == g.components);
  const VectorFn masked = restrict_to(VectorFn(counterexample_g), strip);
  CHECK(masked({0.3, 0.5})[1] == 0.0);
  CHECK(masked({0.3, 0.1})[1] == counterexample_g({0.3, 0.1})[1]);
}

TEST_CASE("regions validate their boxes") {
  CHECK_THROWS_AS(Region(2, {Box{{0.0, 0.0}, {1.2, 0.5}}}), DomainError);
  CHECK_THROWS_AS(Region(2, {Box{{0.5, 0.0}, {0.5, 0.5}}}), DomainError);
  CHECK_THROWS_AS(Region(2, {Box{{0.0, 0.0}, {0.6, 0.6}}, Box{{0.5, 0.5}, {1.0, 1.0}}}),
                  DomainError);
  const Region two(2, {Box{{0.0, 0.0}, {0.5, 0.5}}, Box{{0.5, 0.5}, {1.0, 1.0}}});
  CHECK(two.measure() == doctest::Approx(0.5));
  CHECK_FALSE(two.is_whole());
  CHECK(Region::whole(1).is_whole());
}
