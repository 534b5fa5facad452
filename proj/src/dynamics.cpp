#include "fracgrad/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fracgrad/errors.hpp"
#include "fracgrad/quadrature.hpp"

namespace fracgrad {

namespace {

constexpr int kMaxGrading = 16;
constexpr int kWeightLevels = 12;

double e_aa(double alpha, double z) { return mlf({alpha, alpha}, z); }

int spec_grading(FracOrder alpha) {
  return std::max(2, int(std::ceil(2.0 / alpha.value() - 1e-12)));
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

double time_weight(FracOrder alpha, Weighting weighting, double t) {
  if (weighting == Weighting::none || alpha.is_classical()) return 1.0;
  return std::pow(t, 2.0 * (1.0 - alpha.value()));
}

void require_square_integrable(FracOrder alpha, Weighting weighting) {
  if (weighting == Weighting::none && alpha.value() <= 0.5) {
    throw DomainError(
        "outputs are not square integrable for alpha <= 1/2; use the "
        "compensated weighting");
  }
}

int default_grading(FracOrder alpha, Weighting weighting) {
  int q = spec_grading(alpha);
  if (weighting == Weighting::none && !alpha.is_classical()) {
    require_square_integrable(alpha, weighting);
    // integrand ~ t^{2 alpha - 2}
    const double need = 2.0 / (2.0 * alpha.value() - 1.0);
    q = std::max(q, int(std::ceil(need - 1e-12)));
  }
  return std::min(q, kMaxGrading);
}

TimeGrid TimeGrid::graded(FracOrder alpha, double horizon, int panels, int q) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw DomainError("time grid: horizon must be positive");
  }
  if (panels < 1) throw DomainError("time grid: panels must be >= 1");
  TimeGrid g;
  g.horizon_ = horizon;
  g.grading_ = q > 0 ? q : spec_grading(alpha);
  g.panels_ = panels;
  const QuadratureRule r =
      graded_gauss_legendre(0.0, horizon, panels, kNodesPerPanel, g.grading_);
  g.nodes_ = r.nodes;
  g.weights_ = r.weights;
  return g;
}

TimeGrid TimeGrid::two_sided(FracOrder alpha, double horizon, int panels,
                             int q) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw DomainError("time grid: horizon must be positive");
  }
  if (panels < 1) throw DomainError("time grid: panels must be >= 1");
  TimeGrid g;
  g.horizon_ = horizon;
  g.grading_ = q > 0 ? q : spec_grading(alpha);
  g.panels_ = panels;
  g.two_sided_ = true;
  const QuadratureRule r =
      two_sided_graded(0.0, horizon, panels, kNodesPerPanel, g.grading_);
  g.nodes_ = r.nodes;
  g.weights_ = r.weights;
  return g;
}

TimeGrid TimeGrid::from_nodes(double horizon, std::vector<double> nodes) {
  if (!(horizon > 0.0) || nodes.empty()) {
    throw DomainError("time grid: need a positive horizon and nodes");
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double lo = k == 0 ? 0.0 : nodes[k - 1];
    if (!(nodes[k] > lo) || nodes[k] > horizon * (1 + 1e-12)) {
      throw DomainError("time grid: nodes must increase within (0, b]");
    }
  }
  TimeGrid g;
  g.horizon_ = horizon;
  g.nodes_ = std::move(nodes);
  const std::size_t n = g.nodes_.size();
  g.weights_.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double left = k == 0 ? g.nodes_[0] : 0.5 * (g.nodes_[k] - g.nodes_[k - 1]);
    const double right =
        k + 1 == n ? horizon - g.nodes_[k] : 0.5 * (g.nodes_[k + 1] - g.nodes_[k]);
    g.weights_[k] = left + right;
  }
  return g;
}

std::size_t TimeGrid::mirror(std::size_t k) const {
  if (!two_sided_) throw DomainError("time grid: mirror needs a two-sided grid");
  return nodes_.size() - 1 - k;
}

double gaussian_noise(std::uint64_t seed, std::uint64_t channel,
                      std::uint64_t index) {
  std::uint64_t h = splitmix(seed);
  h = splitmix(h ^ channel);
  h = splitmix(h ^ index);
  const std::uint64_t h2 = splitmix(h);
  const double u1 = double((h >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  const double u2 = double(h2 >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

void ObservationRecord::validate() const {
  for (const auto& ch : channels) {
    if (ch.size() != grid.size()) {
      throw DomainError("observation record: channel length differs from grid");
    }
  }
}

double mode_response(FracOrder alpha, double lambda, double t) {
  if (alpha.is_classical()) {
    if (t < 0.0) throw DomainError("mode response: t must be >= 0");
    return std::exp(lambda * t);
  }
  if (!(t > 0.0)) {
    throw DomainError("mode response: t must be > 0 for alpha < 1");
  }
  const double a = alpha.value();
  return std::pow(t, a - 1.0) * e_aa(a, lambda * std::pow(t, a));
}

double propagate_coeff(FracOrder alpha, double lambda, double c0, double t) {
  if (lambda > 0.0) throw DomainError("propagate_coeff: lambda must be <= 0");
  const double r = mode_response(alpha, lambda, t);
  return c0 == 0.0 ? 0.0 : r * c0;
}

Eigen::MatrixXd response_table(const Basis& basis, FracOrder alpha,
                               const TimeGrid& grid) {
  const auto& groups = basis.groups();
  Eigen::MatrixXd per_group(Eigen::Index(groups.size()), Eigen::Index(grid.size()));
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
      per_group(Eigen::Index(g), Eigen::Index(k)) =
          mode_response(alpha, groups[g].eigenvalue, grid.nodes()[k]);
    }
  }
  Eigen::MatrixXd r(Eigen::Index(basis.size()), Eigen::Index(grid.size()));
  for (std::size_t m = 0; m < basis.size(); ++m) {
    r.row(Eigen::Index(m)) = per_group.row(Eigen::Index(basis.group_of()[m]));
  }
  return r;
}

ObservationRecord simulate(const Eigen::VectorXd& coefficients,
                           const Eigen::MatrixXd& couplings,
                           const Eigen::MatrixXd& responses,
                           const TimeGrid& grid,
                           std::optional<NoiseSpec> noise) {
  if (couplings.cols() != coefficients.size() ||
      responses.rows() != coefficients.size() ||
      std::size_t(responses.cols()) != grid.size()) {
    throw DomainError("simulate: inconsistent operand sizes");
  }
  if (noise && !(noise->sigma >= 0.0)) {
    throw DomainError("simulate: noise sigma must be >= 0");
  }
  const Eigen::Index p = couplings.rows();
  const Eigen::Index n = coefficients.size();
  ObservationRecord rec{grid, {}, noise};
  rec.channels.assign(std::size_t(p), std::vector<double>(grid.size(), 0.0));
  for (Eigen::Index i = 0; i < p; ++i) {
    auto& ch = rec.channels[std::size_t(i)];
    for (std::size_t k = 0; k < grid.size(); ++k) {
      double s = 0.0;
      for (Eigen::Index m = 0; m < n; ++m) {
        const double kc = couplings(i, m) * coefficients[m];
        if (kc != 0.0) s += kc * responses(m, Eigen::Index(k));
      }
      if (noise && noise->sigma > 0.0) {
        s += noise->sigma * gaussian_noise(noise->seed, std::uint64_t(i), k);
      }
      ch[k] = s;
    }
  }
  return rec;
}

ObservationRecord simulate(const SpectralField& y0, const SensorSuite& suite,
                           FracOrder alpha, const TimeGrid& grid,
                           std::optional<NoiseSpec> noise) {
  const Basis& basis = *y0.basis();
  return simulate(y0.coefficients(), coupling_matrix(suite, basis),
                  response_table(basis, alpha, grid), grid, noise);
}

double duhamel_weight(FracOrder alpha, double lambda_j, double lambda_k,
                      double b, Weighting weighting, int panels) {
  if (!(b > 0.0)) throw DomainError("duhamel_weight: b must be positive");
  if (lambda_j > 0.0 || lambda_k > 0.0) {
    throw DomainError("duhamel_weight: eigenvalues must be <= 0");
  }
  require_square_integrable(alpha, weighting);
  const double a = alpha.value();
  if (alpha.is_classical()) {
    const QuadratureRule r = two_sided_graded(0.0, b, panels, 8, 1);
    const std::size_t m = r.size();
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      s += r.weights[k] * std::exp(lambda_j * r.nodes[k]) *
           std::exp(lambda_k * r.nodes[m - 1 - k]);
    }
    return s;
  }
  const QuadratureRule r =
      two_sided_graded(0.0, b, panels, 8, spec_grading(alpha), kWeightLevels);
  const std::size_t m = r.size();
  const std::size_t half = m / 2;
  double sum = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    // distances to both ends without cancellation near b
    const double s = k < half ? r.nodes[k] : b - r.nodes[m - 1 - k];
    const double d = k < half ? b - r.nodes[k] : r.nodes[m - 1 - k];
    double v = e_aa(a, lambda_j * std::pow(s, a)) * e_aa(a, lambda_k * std::pow(d, a));
    if (weighting == Weighting::none) v *= std::pow(s * d, a - 1.0);
    sum += r.weights[k] * v;
  }
  return sum;
}

double product_weight(FracOrder alpha, double lambda_j, double lambda_k,
                      double b, Weighting weighting, int panels) {
  if (!(b > 0.0)) throw DomainError("product_weight: b must be positive");
  const QuadratureRule r = graded_gauss_legendre(
      0.0, b, panels, 8, default_grading(alpha, weighting), kWeightLevels);
  double sum = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    const double t = r.nodes[k];
    sum += r.weights[k] * time_weight(alpha, weighting, t) *
           mode_response(alpha, lambda_j, t) * mode_response(alpha, lambda_k, t);
  }
  return sum;
}

}  // namespace fracgrad
