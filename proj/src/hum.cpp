#include "fracgrad/hum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracgrad/errors.hpp"

namespace fracgrad {

namespace {

// Z = kappa diag(c) R, the p x K outputs of a state with coefficients c.
Eigen::MatrixXd outputs(const RegionalModel& m, const Eigen::VectorXd& c) {
  return m.kappa * c.asDiagonal() * m.responses;
}

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& channels,
                          std::size_t samples) {
  Eigen::MatrixXd z(Eigen::Index(channels.size()), Eigen::Index(samples));
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (channels[i].size() != samples) {
      throw DomainError("hum: channel length differs from the time grid");
    }
    for (std::size_t k = 0; k < samples; ++k) {
      z(Eigen::Index(i), Eigen::Index(k)) = channels[i][k];
    }
  }
  return z;
}

Eigen::VectorXd rhs_from_matrix(const RegionalModel& m, const Eigen::MatrixXd& z) {
  const Eigen::Map<const Eigen::VectorXd> tw(m.time_weights.data(),
                                            Eigen::Index(m.time_weights.size()));
  // per state mode: sum_k tw_k R(j,k) sum_i kappa_ij z_i(t_k)
  const Eigen::MatrixXd proj = m.kappa.transpose() * z;
  const Eigen::VectorXd per_mode = proj.cwiseProduct(m.responses) * tw;
  return m.d * per_mode;
}

bool same_nodes(const TimeGrid& a, const TimeGrid& b) {
  if (a.size() != b.size()) return false;
  const double tol = 1e-13 * std::max(a.horizon(), b.horizon());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a.nodes()[k] - b.nodes()[k]) > tol) return false;
  }
  return true;
}

// Channels of `record` at the model nodes, interpolating t^{1-alpha} z.
Eigen::MatrixXd on_model_grid(const RegionalModel& m,
                              const ObservationRecord& record,
                              std::vector<std::string>* warnings) {
  record.validate();
  if (record.channel_count() != m.channels()) {
    throw DomainError("hum: record channel count differs from the suite");
  }
  if (same_nodes(record.grid, m.grid)) {
    return to_matrix(record.channels, m.grid.size());
  }
  if (warnings && record.grid.size() < m.grid.size()) {
    warnings->push_back("observation grid (" + std::to_string(record.grid.size()) +
                        " samples) is coarser than the quadrature mesh (" +
                        std::to_string(m.grid.size()) + " nodes); data interpolated");
  }
  const double a = m.alpha.value();
  const auto& tr = record.grid.nodes();
  Eigen::MatrixXd z(Eigen::Index(m.channels()), Eigen::Index(m.grid.size()));
  for (std::size_t k = 0; k < m.grid.size(); ++k) {
    const double t = m.grid.nodes()[k];
    const auto it = std::upper_bound(tr.begin(), tr.end(), t);
    for (std::size_t i = 0; i < m.channels(); ++i) {
      const auto& ch = record.channels[i];
      auto u = [&](std::size_t r) { return std::pow(tr[r], 1.0 - a) * ch[r]; };
      double v;
      if (it == tr.begin()) {
        v = u(0);
      } else if (it == tr.end()) {
        v = u(tr.size() - 1);
      } else {
        const std::size_t hi = std::size_t(it - tr.begin());
        const double s = (t - tr[hi - 1]) / (tr[hi] - tr[hi - 1]);
        v = (1 - s) * u(hi - 1) + s * u(hi);
      }
      z(Eigen::Index(i), Eigen::Index(k)) = v * std::pow(t, a - 1.0);
    }
  }
  return z;
}

double weighted_misfit(const RegionalModel& m, const Eigen::MatrixXd& diff) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < diff.cols(); ++k) {
    s += m.time_weights[std::size_t(k)] * diff.col(k).squaredNorm();
  }
  return std::sqrt(s);
}

}  // namespace

void HumConfig::validate() const {
  if (!(tolerance > 0.0)) throw DomainError("hum: tolerance must be positive");
  if (!(epsilon >= 0.0)) throw DomainError("hum: epsilon must be >= 0");
  if (max_iterations < 1) throw DomainError("hum: max_iterations must be >= 1");
}

Eigen::VectorXd apply_lambda(const RegionalModel& model, const Eigen::VectorXd& a) {
  if (std::size_t(a.size()) != model.potentials()) {
    throw DomainError("apply_lambda: potential vector has the wrong size");
  }
  const Eigen::VectorXd c = model.d.transpose() * a;
  return rhs_from_matrix(model, outputs(model, c));
}

Eigen::VectorXd rhs_from_channels(const RegionalModel& model,
                                  const std::vector<std::vector<double>>& channels) {
  if (channels.size() != model.channels()) {
    throw DomainError("rhs_from_channels: channel count differs from the suite");
  }
  return rhs_from_matrix(model, to_matrix(channels, model.grid.size()));
}

Eigen::VectorXd rhs_from_data(const RegionalModel& model,
                              const ObservationRecord& record,
                              std::vector<std::string>* warnings) {
  return rhs_from_matrix(model, on_model_grid(model, record, warnings));
}

CgResult conjugate_gradient(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& apply,
    const Eigen::VectorXd& b, const HumConfig& config) {
  config.validate();
  CgResult res;
  res.x = Eigen::VectorXd::Zero(b.size());
  const double bnorm = b.norm();
  if (bnorm == 0.0) {
    res.converged = true;
    return res;
  }
  Eigen::VectorXd r = b;
  Eigen::VectorXd p = r;
  double rr = r.squaredNorm();
  res.min_ritz = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= config.max_iterations; ++it) {
    const Eigen::VectorXd ap = apply(p) + config.epsilon * p;
    const double pp = p.squaredNorm();
    const double curv = p.dot(ap);
    const double ritz = curv / pp;
    res.max_ritz = std::max(res.max_ritz, ritz);
    res.min_ritz = std::min(res.min_ritz, ritz);
    res.iterations = it;
    if (!(curv > 1e-14 * res.max_ritz * pp)) {
      if (config.strict_spd) {
        const Eigen::VectorXd dir = p / std::sqrt(pp);
        throw SpdViolationError(
            "hum: non-positive curvature in conjugate gradients; the "
            "configuration is not observable on the potential span",
            std::vector<double>(dir.data(), dir.data() + dir.size()), ritz);
      }
      break;
    }
    const double step = rr / curv;
    res.x += step * p;
    r -= step * ap;
    const double rr_new = r.squaredNorm();
    res.residual = std::sqrt(rr_new) / bnorm;
    if (res.residual <= config.tolerance) {
      res.converged = true;
      break;
    }
    p = r + (rr_new / rr) * p;
    rr = rr_new;
  }
  return res;
}

QuadGrid omega_grid(const RegionalModel& model) {
  return region_grid(model.omega, std::max(model.state_basis->truncation(),
                                           model.potential_basis->truncation()));
}

VectorFieldSamples potential_gradient(const RegionalModel& model,
                                      const Eigen::VectorXd& a) {
  const SpectralField field(model.potential_basis, a);
  return sample([&](const Point& x) { return field.gradient(x); },
                omega_grid(model));
}

HumResult solve(const ObservationRecord& record, const RegionalModel& model,
                const HumConfig& config,
                const std::optional<VectorFn>& true_gradient) {
  config.validate();
  HumResult out{Eigen::VectorXd(), SpectralField::zero(model.state_basis), {}, {},
                0, 0.0, false, 0.0, std::nullopt, std::nullopt, {}};
  const Eigen::VectorXd b = rhs_from_data(model, record, &out.warnings);
  const CgResult cg = conjugate_gradient(
      [&](const Eigen::VectorXd& v) { return apply_lambda(model, v); }, b, config);
  out.potentials = cg.x;
  out.iterations = cg.iterations;
  out.residual = cg.residual;
  out.converged = cg.converged;
  out.min_ritz = cg.min_ritz;
  if (!cg.converged) {
    out.warnings.push_back("conjugate gradients stopped after " +
                           std::to_string(cg.iterations) +
                           " iterations without reaching the tolerance");
  }
  out.initial_state =
      SpectralField(model.state_basis, model.d.transpose() * cg.x);
  const QuadGrid grid = omega_grid(model);
  out.reconstructed = potential_gradient(model, cg.x);
  const SpectralField& y = out.initial_state;
  out.initial_gradient =
      sample([&](const Point& x) { return y.gradient(x); }, grid);
  if (true_gradient) {
    const VectorFieldSamples truth = sample(*true_gradient, grid);
    out.error = reconstruction_error(out.initial_gradient, truth);
    out.potential_error = reconstruction_error(out.reconstructed, truth);
  }
  return out;
}

double reconstruction_error(const VectorFieldSamples& reconstructed,
                            const VectorFieldSamples& truth) {
  if (reconstructed.grid.size() != truth.grid.size() ||
      reconstructed.components.size() != truth.components.size()) {
    throw DomainError("reconstruction_error: samples on different grids");
  }
  double diff = 0.0;
  double ref = 0.0;
  for (std::size_t s = 0; s < truth.components.size(); ++s) {
    for (std::size_t k = 0; k < truth.grid.size(); ++k) {
      const double w = truth.grid.weights[k];
      const double d = reconstructed.components[s][k] - truth.components[s][k];
      diff += w * d * d;
      ref += w * truth.components[s][k] * truth.components[s][k];
    }
  }
  return ref > 0.0 ? std::sqrt(diff / ref) : std::sqrt(diff);
}

double discrepancy_epsilon(const RegionalModel& model,
                           const ObservationRecord& record, double sigma,
                           const std::vector<double>& candidates, double tau) {
  const Eigen::MatrixXd z = on_model_grid(model, record, nullptr);
  const Eigen::VectorXd b = rhs_from_matrix(model, z);
  double tw_sum = 0.0;
  for (double w : model.time_weights) tw_sum += w;
  const double delta = sigma * std::sqrt(double(model.channels()) * tw_sum);
  std::vector<double> eps = candidates;
  std::sort(eps.begin(), eps.end(), std::greater<>());
  for (double e : eps) {
    HumConfig cfg;
    cfg.epsilon = e;
    cfg.strict_spd = false;
    const CgResult cg = conjugate_gradient(
        [&](const Eigen::VectorXd& v) { return apply_lambda(model, v); }, b, cfg);
    const Eigen::MatrixXd fit = outputs(model, model.d.transpose() * cg.x);
    if (weighted_misfit(model, fit - z) <= tau * delta) return e;
  }
  return 0.0;
}

}  // namespace fracgrad
