#include "fracgrad/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fracgrad/errors.hpp"
#include "fracgrad/quadrature.hpp"

namespace fracgrad {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kNodesPerPanel = 8;
constexpr double kGroupTol = 1e-9;

void check_dimension(int d) {
  if (d != 1 && d != 2) {
    throw DomainError("dimension must be 1 or 2");
  }
}

}  // namespace

double Mode::eigenvalue() const noexcept {
  return -static_cast<double>(i * i + j * j) * kPi * kPi;
}

double Mode::value(const Point& p) const noexcept {
  if (j == 0) return std::numbers::sqrt2 * std::sin(i * kPi * p.x1);
  return 2.0 * std::sin(i * kPi * p.x1) * std::sin(j * kPi * p.x2);
}

Vec2 Mode::gradient(const Point& p) const noexcept {
  if (j == 0) {
    return {std::numbers::sqrt2 * i * kPi * std::cos(i * kPi * p.x1), 0.0};
  }
  const double s1 = std::sin(i * kPi * p.x1), c1 = std::cos(i * kPi * p.x1);
  const double s2 = std::sin(j * kPi * p.x2), c2 = std::cos(j * kPi * p.x2);
  return {2.0 * i * kPi * c1 * s2, 2.0 * j * kPi * s1 * c2};
}

std::size_t Basis::index_of(const Mode& m) const noexcept {
  for (std::size_t k = 0; k < modes_.size(); ++k) {
    if (modes_[k] == m) return k;
  }
  return modes_.size();
}

BasisPtr build_basis(int dimension, int truncation) {
  check_dimension(dimension);
  if (truncation < 1) throw DomainError("build_basis: truncation must be >= 1");
  const std::size_t count =
      dimension == 1 ? std::size_t(truncation)
                     : std::size_t(truncation) * std::size_t(truncation);
  if (count > Basis::kMaxModes) {
    std::ostringstream os;
    os << "build_basis: " << count << " modes exceed the cap of "
       << Basis::kMaxModes;
    throw DomainError(os.str());
  }
  std::vector<Mode> modes;
  modes.reserve(count);
  for (int i = 1; i <= truncation; ++i) {
    if (dimension == 1) {
      modes.push_back({i, 0});
    } else {
      for (int j = 1; j <= truncation; ++j) modes.push_back({i, j});
    }
  }
  std::stable_sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) {
    return a.eigenvalue() > b.eigenvalue();
  });

  auto basis = std::make_shared<Basis>();
  basis->dimension_ = dimension;
  basis->truncation_ = truncation;
  basis->modes_ = std::move(modes);
  basis->group_of_.resize(basis->modes_.size());
  for (std::size_t k = 0; k < basis->modes_.size(); ++k) {
    const double lam = basis->modes_[k].eigenvalue();
    if (basis->groups_.empty() ||
        std::abs(basis->groups_.back().eigenvalue - lam) >
            kGroupTol * std::abs(lam)) {
      basis->groups_.push_back({lam, {}});
    }
    basis->groups_.back().members.push_back(k);
    basis->group_of_[k] = basis->groups_.size() - 1;
  }
  return basis;
}

bool Box::contains(const Point& p, int dimension) const noexcept {
  if (p.x1 < lo[0] || p.x1 > hi[0]) return false;
  if (dimension == 2 && (p.x2 < lo[1] || p.x2 > hi[1])) return false;
  return true;
}

double Box::measure(int dimension) const noexcept {
  const double m = hi[0] - lo[0];
  return dimension == 1 ? m : m * (hi[1] - lo[1]);
}

Region::Region(int dimension, std::vector<Box> boxes)
    : dimension_(dimension), boxes_(std::move(boxes)) {
  check_dimension(dimension);
  if (boxes_.empty()) throw DomainError("region: no boxes given");
  for (const Box& b : boxes_) {
    for (int a = 0; a < dimension; ++a) {
      if (!(b.lo[a] >= 0.0 && b.hi[a] <= 1.0 && b.lo[a] < b.hi[a])) {
        throw DomainError(
            "region: each box must be non-degenerate and inside the unit "
            "domain");
      }
    }
  }
  for (std::size_t a = 0; a < boxes_.size(); ++a) {
    for (std::size_t b = a + 1; b < boxes_.size(); ++b) {
      bool overlap = true;
      for (int ax = 0; ax < dimension; ++ax) {
        const double lo = std::max(boxes_[a].lo[ax], boxes_[b].lo[ax]);
        const double hi = std::min(boxes_[a].hi[ax], boxes_[b].hi[ax]);
        if (hi <= lo) overlap = false;
      }
      if (overlap) throw DomainError("region: boxes overlap");
    }
  }
  if (dimension == 1) {
    for (Box& b : boxes_) {
      b.lo[1] = 0.0;
      b.hi[1] = 1.0;
    }
  }
}

Region Region::whole(int dimension) { return Region(dimension, {Box{}}); }

bool Region::contains(const Point& p) const noexcept {
  return std::any_of(boxes_.begin(), boxes_.end(),
                     [&](const Box& b) { return b.contains(p, dimension_); });
}

double Region::measure() const noexcept {
  double m = 0.0;
  for (const Box& b : boxes_) m += b.measure(dimension_);
  return m;
}

bool Region::is_whole() const noexcept {
  return std::abs(measure() - 1.0) < 1e-14;
}

double QuadGrid::weight_sum() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

int panels_for_index(int max_index) { return std::max(4, 2 * max_index); }

namespace {

void add_cell(QuadGrid& grid, const Box& cell, int panels1, int panels2,
              bool inside) {
  const QuadratureRule r1 =
      composite_gauss_legendre(cell.lo[0], cell.hi[0], panels1, kNodesPerPanel);
  if (grid.dimension == 1) {
    for (std::size_t a = 0; a < r1.size(); ++a) {
      grid.nodes.push_back({r1.nodes[a], 0.0});
      grid.weights.push_back(r1.weights[a]);
      grid.inside.push_back(inside);
    }
    return;
  }
  const QuadratureRule r2 =
      composite_gauss_legendre(cell.lo[1], cell.hi[1], panels2, kNodesPerPanel);
  for (std::size_t a = 0; a < r1.size(); ++a) {
    for (std::size_t b = 0; b < r2.size(); ++b) {
      grid.nodes.push_back({r1.nodes[a], r2.nodes[b]});
      grid.weights.push_back(r1.weights[a] * r2.weights[b]);
      grid.inside.push_back(inside);
    }
  }
}

}  // namespace

QuadGrid region_grid(const Region& region, int max_index) {
  QuadGrid grid;
  grid.dimension = region.dimension();
  const int panels = panels_for_index(max_index);
  for (const Box& b : region.boxes()) add_cell(grid, b, panels, panels, true);
  return grid;
}

QuadGrid aligned_grid(const Region& region, int max_index) {
  const int d = region.dimension();
  std::array<std::vector<double>, 2> cuts;
  for (int ax = 0; ax < d; ++ax) {
    cuts[ax] = {0.0, 1.0};
    for (const Box& b : region.boxes()) {
      cuts[ax].push_back(b.lo[ax]);
      cuts[ax].push_back(b.hi[ax]);
    }
    std::sort(cuts[ax].begin(), cuts[ax].end());
    cuts[ax].erase(std::unique(cuts[ax].begin(), cuts[ax].end()),
                   cuts[ax].end());
  }
  if (d == 1) cuts[1] = {0.0, 1.0};
  const double density = panels_for_index(max_index);
  QuadGrid grid;
  grid.dimension = d;
  for (std::size_t a = 0; a + 1 < cuts[0].size(); ++a) {
    for (std::size_t b = 0; b + 1 < cuts[1].size(); ++b) {
      Box cell{{cuts[0][a], cuts[1][b]}, {cuts[0][a + 1], cuts[1][b + 1]}};
      const Point centre{0.5 * (cell.lo[0] + cell.hi[0]),
                         0.5 * (cell.lo[1] + cell.hi[1])};
      const int p1 = std::max(
          1, int(std::ceil(density * (cell.hi[0] - cell.lo[0]) - 1e-9)));
      const int p2 = std::max(
          1, int(std::ceil(density * (cell.hi[1] - cell.lo[1]) - 1e-9)));
      add_cell(grid, cell, p1, p2, region.contains(centre));
    }
  }
  return grid;
}

double VectorFieldSamples::squared_norm() const {
  double s = 0.0;
  for (const auto& comp : components) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
      s += grid.weights[k] * comp[k] * comp[k];
    }
  }
  return s;
}

VectorFieldSamples sample(const VectorFn& g, const QuadGrid& grid) {
  VectorFieldSamples out;
  out.grid = grid;
  out.components.assign(grid.dimension, std::vector<double>(grid.size()));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Vec2 v = g(grid.nodes[k]);
    for (int s = 0; s < grid.dimension; ++s) out.components[s][k] = v[s];
  }
  return out;
}

SpectralField::SpectralField(BasisPtr basis, Eigen::VectorXd coefficients)
    : basis_(std::move(basis)), coeffs_(std::move(coefficients)) {
  if (!basis_) throw DomainError("SpectralField: null basis");
  if (std::size_t(coeffs_.size()) != basis_->size()) {
    throw DomainError("SpectralField: coefficient count does not match basis");
  }
}

SpectralField SpectralField::zero(BasisPtr basis) {
  const auto n = Eigen::Index(basis->size());
  return SpectralField(std::move(basis), Eigen::VectorXd::Zero(n));
}

double SpectralField::coefficient(const Mode& m) const {
  const std::size_t k = basis_->index_of(m);
  return k < basis_->size() ? coeffs_[Eigen::Index(k)] : 0.0;
}

double SpectralField::evaluate(const Point& p) const {
  double s = 0.0;
  const auto& modes = basis_->modes();
  for (std::size_t k = 0; k < modes.size(); ++k) {
    s += coeffs_[Eigen::Index(k)] * modes[k].value(p);
  }
  return s;
}

Vec2 SpectralField::gradient(const Point& p) const {
  Vec2 g{0.0, 0.0};
  const auto& modes = basis_->modes();
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const Vec2 d = modes[k].gradient(p);
    g[0] += coeffs_[Eigen::Index(k)] * d[0];
    g[1] += coeffs_[Eigen::Index(k)] * d[1];
  }
  return g;
}

double inner_product(const ScalarFn& f, const Mode& mode, const Region& region,
                     int extra_index) {
  const QuadGrid grid =
      region_grid(region, std::max(mode.max_index(), extra_index));
  double s = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    s += grid.weights[k] * f(grid.nodes[k]) * mode.value(grid.nodes[k]);
  }
  return s;
}

SpectralField project(const ScalarFn& f, BasisPtr basis, int extra_index) {
  const QuadGrid grid =
      region_grid(Region::whole(basis->dimension()),
                  std::max(basis->truncation(), extra_index));
  std::vector<double> fv(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) fv[k] = f(grid.nodes[k]);
  Eigen::VectorXd c(Eigen::Index(basis->size()));
  for (std::size_t q = 0; q < basis->size(); ++q) {
    const Mode& m = basis->modes()[q];
    double s = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      s += grid.weights[k] * fv[k] * m.value(grid.nodes[k]);
    }
    c[Eigen::Index(q)] = s;
  }
  return SpectralField(std::move(basis), std::move(c));
}

std::vector<Vec2> grad_eval(const Mode& mode, std::span<const Point> points) {
  std::vector<Vec2> out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back(mode.gradient(p));
  return out;
}

SpectralField grad_adjoint(const VectorFieldSamples& g, BasisPtr basis) {
  if (g.dimension() != basis->dimension()) {
    throw DomainError("grad_adjoint: field and basis dimensions differ");
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(Eigen::Index(basis->size()));
  const auto& grid = g.grid;
  for (std::size_t q = 0; q < basis->size(); ++q) {
    const Mode& m = basis->modes()[q];
    double s = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const Vec2 d = m.gradient(grid.nodes[k]);
      double v = g.components[0][k] * d[0];
      if (grid.dimension == 2) v += g.components[1][k] * d[1];
      s += grid.weights[k] * v;
    }
    c[Eigen::Index(q)] = s;
  }
  return SpectralField(std::move(basis), std::move(c));
}

VectorFieldSamples restrict_to(const VectorFieldSamples& g,
                               const Region& region) {
  VectorFieldSamples out = g;
  for (std::size_t k = 0; k < g.grid.size(); ++k) {
    if (!region.contains(g.grid.nodes[k])) {
      for (auto& comp : out.components) comp[k] = 0.0;
    }
  }
  return out;
}

VectorFn restrict_to(VectorFn g, const Region& region) {
  return [g = std::move(g), region](const Point& p) -> Vec2 {
    return region.contains(p) ? g(p) : Vec2{0.0, 0.0};
  };
}

ScalarFn restrict_to(ScalarFn f, const Region& region) {
  return [f = std::move(f), region](const Point& p) {
    return region.contains(p) ? f(p) : 0.0;
  };
}

VectorFn extend_by_zero(VectorFn g, const Region& region) {
  return restrict_to(std::move(g), region);
}

}  // namespace fracgrad
