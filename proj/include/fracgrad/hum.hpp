#pragma once

// HUM reconstruction of a regional initial gradient: the operator Lambda on
// the potential span {p_omega grad xi_q}, its data-side right-hand side, and
// a conjugate-gradient solve.

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracgrad/dynamics.hpp"
#include "fracgrad/observability.hpp"
#include "fracgrad/spectral.hpp"

namespace fracgrad {

struct HumConfig {
  double tolerance = 1e-10;  ///< relative residual
  int max_iterations = 500;
  double epsilon = 0.0;      ///< Tikhonov shift
  /// Throw SpdViolationError on non-positive curvature (otherwise stop).
  bool strict_spd = true;

  void validate() const;
};

/// Lambda a: forward outputs of grad* p*_omega g_a, then their weighted
/// time integral against every potential's outputs. No matrix is formed.
Eigen::VectorXd apply_lambda(const RegionalModel& model, const Eigen::VectorXd& a);

/// Right-hand side from channel samples given on the model grid.
Eigen::VectorXd rhs_from_channels(const RegionalModel& model,
                                  const std::vector<std::vector<double>>& channels);

/// Right-hand side from a record on any grid. Off-grid records are
/// interpolated in t^{1-alpha} z(t); a warning is appended when the record
/// is coarser than the model grid.
Eigen::VectorXd rhs_from_data(const RegionalModel& model,
                              const ObservationRecord& record,
                              std::vector<std::string>* warnings = nullptr);

struct CgResult {
  Eigen::VectorXd x;
  int iterations = 0;
  double residual = 0.0;  ///< final relative residual
  bool converged = false;
  double min_ritz = 0.0;  ///< smallest curvature p^T A p / p^T p seen
  double max_ritz = 0.0;
};

/// Conjugate gradients on (A + epsilon I) x = b from x0 = 0.
CgResult conjugate_gradient(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& apply,
    const Eigen::VectorXd& b, const HumConfig& config);

struct HumResult {
  Eigen::VectorXd potentials;      ///< a*, so that g* = p_omega sum a_q grad xi_q
  SpectralField initial_state;     ///< grad* p*_omega g*
  VectorFieldSamples reconstructed;      ///< g* on omega
  VectorFieldSamples initial_gradient;   ///< p_omega grad of initial_state
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
  double min_ritz = 0.0;
  std::optional<double> error;           ///< of initial_gradient vs truth
  std::optional<double> potential_error; ///< of g* vs truth
  std::vector<std::string> warnings;
};

/// Samples p_omega sum a_q grad xi_q on the quadrature grid of omega.
VectorFieldSamples potential_gradient(const RegionalModel& model,
                                      const Eigen::VectorXd& a);

/// Grid on omega used for all reconstruction samples and errors.
QuadGrid omega_grid(const RegionalModel& model);

/// Solves (Lambda + epsilon) a = rhs_from_data(record); `converged` is false
/// when the iteration budget runs out.
HumResult solve(const ObservationRecord& record, const RegionalModel& model,
                const HumConfig& config,
                const std::optional<VectorFn>& true_gradient = std::nullopt);

/// Relative (L^2(omega))^n error, absolute when the truth vanishes.
double reconstruction_error(const VectorFieldSamples& reconstructed,
                            const VectorFieldSamples& truth);

/// Largest epsilon from `candidates` whose weighted output misfit stays below
/// tau times the expected noise norm for level sigma; 0 if none does.
double discrepancy_epsilon(const RegionalModel& model,
                           const ObservationRecord& record, double sigma,
                           const std::vector<double>& candidates,
                           double tau = 1.1);

}  // namespace fracgrad
