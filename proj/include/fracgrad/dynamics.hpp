#pragma once

// Mild solution of the Riemann-Liouville diffusion in the eigenbasis, sensor
// output synthesis, and the singular-kernel time integrals.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "fracgrad/sensing.hpp"
#include "fracgrad/special.hpp"
#include "fracgrad/spectral.hpp"

namespace fracgrad {

enum class Weighting { none, compensated };

/// Time weight of the measurement norm: 1, or t^{2(1-alpha)} when the
/// observations are multiplied by t^{1-alpha}.
double time_weight(FracOrder alpha, Weighting weighting, double t);

/// Grading exponent for same-time products e_j(t) e_k(t) w(t) on [0, b].
int default_grading(FracOrder alpha, Weighting weighting);

/// Quadrature nodes in (0, b], graded toward 0 (and toward b when two-sided).
class TimeGrid {
 public:
  static constexpr int kNodesPerPanel = 8;

  /// Graded toward t = 0. q <= 0 selects max(2, ceil(2/alpha)).
  static TimeGrid graded(FracOrder alpha, double horizon, int panels, int q = 0);
  /// Graded toward both ends with `panels` per half; node k mirrors
  /// node size()-1-k.
  static TimeGrid two_sided(FracOrder alpha, double horizon, int panels,
                            int q = 0);
  /// Arbitrary increasing nodes in (0, b] (e.g. read from a file), with
  /// trapezoidal weights anchored at 0.
  static TimeGrid from_nodes(double horizon, std::vector<double> nodes);

  double horizon() const noexcept { return horizon_; }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  int grading() const noexcept { return grading_; }
  int panels() const noexcept { return panels_; }
  bool is_two_sided() const noexcept { return two_sided_; }
  /// Index of the node at b - t_k; DomainError unless two-sided.
  std::size_t mirror(std::size_t k) const;

 private:
  double horizon_ = 1.0;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  int grading_ = 1;
  int panels_ = 0;
  bool two_sided_ = false;
};

struct NoiseSpec {
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

/// Standard normal deviate determined by (seed, channel, index) alone.
double gaussian_noise(std::uint64_t seed, std::uint64_t channel,
                      std::uint64_t index);

struct ObservationRecord {
  TimeGrid grid;
  /// channels[i][k] = z_i(t_k)
  std::vector<std::vector<double>> channels;
  std::optional<NoiseSpec> noise;

  std::size_t channel_count() const noexcept { return channels.size(); }
  /// Checks channel lengths against the grid; DomainError otherwise.
  void validate() const;
};

/// t^{alpha-1} E_{alpha,alpha}(lambda t^alpha), the response of a unit mode.
double mode_response(FracOrder alpha, double lambda, double t);

/// t^{alpha-1} E_{alpha,alpha}(lambda t^alpha) c0. DomainError for t <= 0
/// when alpha < 1 and for lambda > 0.
double propagate_coeff(FracOrder alpha, double lambda, double c0, double t);

/// responses(m, k) = mode_response for the group eigenvalue of mode m at t_k.
/// Modes sharing an eigenvalue reuse a single evaluation.
Eigen::MatrixXd response_table(const Basis& basis, FracOrder alpha,
                               const TimeGrid& grid);

/// z_i(t_k) = sum_m propagate_coeff(alpha, lambda_m, c_m, t_k) coupling(i, m),
/// plus N(0, sigma^2) noise when requested.
ObservationRecord simulate(const SpectralField& y0, const SensorSuite& suite,
                           FracOrder alpha, const TimeGrid& grid,
                           std::optional<NoiseSpec> noise = std::nullopt);

/// Variant reusing a coupling matrix and response table.
ObservationRecord simulate(const Eigen::VectorXd& coefficients,
                           const Eigen::MatrixXd& couplings,
                           const Eigen::MatrixXd& responses,
                           const TimeGrid& grid,
                           std::optional<NoiseSpec> noise = std::nullopt);

/// int_0^b w(s) e_j(s) e_k(b-s) ds with e(s) = s^{alpha-1}E_{alpha,alpha}(lambda
/// s^alpha), w = 1 or s^{1-alpha}(b-s)^{1-alpha}. Two-sided graded mesh with
/// 32 panels per half, 8 nodes per panel. `panels` overrides the panel count.
double duhamel_weight(FracOrder alpha, double lambda_j, double lambda_k,
                      double b, Weighting weighting, int panels = 32);

/// int_0^b w(t) e_j(t) e_k(t) dt with w = time_weight; the entry of the
/// measurement-norm Gram of two modes.
double product_weight(FracOrder alpha, double lambda_j, double lambda_k,
                      double b, Weighting weighting, int panels = 32);

/// Pre: alpha > 1/2 unless weighting is compensated.
void require_square_integrable(FracOrder alpha, Weighting weighting);

}  // namespace fracgrad
