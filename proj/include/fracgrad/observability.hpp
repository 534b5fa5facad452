#pragma once

// Strategic-sensor rank tests, kernel membership of K grad* p*_omega, and the
// regional gradient Gramian.

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fracgrad/dynamics.hpp"
#include "fracgrad/sensing.hpp"
#include "fracgrad/special.hpp"
#include "fracgrad/spectral.hpp"

namespace fracgrad {

/// G_j^s for every eigenvalue group j and axis s < dimension.
struct GMatrixSet {
  BasisPtr basis;
  /// matrices[j][s] is p x r_j; entry (i, k) pairs sensor i with the k-th
  /// member of group j differentiated along axis s.
  std::vector<std::array<Eigen::MatrixXd, 2>> matrices;

  const Eigen::MatrixXd& at(std::size_t group, int axis) const {
    return matrices.at(group)[std::size_t(axis)];
  }
};

GMatrixSet build_g_matrices(BasisPtr basis, const SensorSuite& suite);

/// Numerical rank at singular-value tolerance rel_tol * max(sigma_max, scale).
int numerical_rank(const Eigen::MatrixXd& m, double rel_tol, double scale);

struct StrategicReport {
  bool strategic = false;
  int truncation = 0;
  std::size_t sensors = 0;
  int r_max = 0;
  std::vector<int> ranks;           ///< rank of G_j^1 per tested group
  std::vector<int> multiplicities;  ///< r_j per tested group
  /// 1-based group number (the mode index in 1-D) of the first failure.
  std::optional<std::size_t> offending_group;
  std::string reason;
};

/// Rank test: p >= r_max and rank G_j^1 = r_j for every group up to
/// the basis truncation. Pre: one-dimensional basis.
StrategicReport strategic_test_1d(const GMatrixSet& gset, std::size_t p,
                                  int r_max);

struct KernelTestResult {
  bool in_kernel = true;
  double sup_norm = 0.0;
  double scale = 0.0;
  SpectralField state;
  ObservationRecord record;
};

/// Outputs of y0 = grad* p*_omega p_omega g. Exactness of the restriction
/// needs `g` sampled on a grid aligned with omega (see aligned_grid).
KernelTestResult kernel_test(const VectorFieldSamples& g, BasisPtr basis,
                             const SensorSuite& suite, FracOrder alpha,
                             const Region& omega, const TimeGrid& grid);

/// Everything the Gramian and the HUM operator share.
struct RegionalModel {
  BasisPtr state_basis;
  BasisPtr potential_basis;
  Region omega;
  FracOrder alpha;
  Weighting weighting;
  TimeGrid grid;
  Eigen::MatrixXd d;          ///< Q x n, (p_omega grad xi_q, grad xi_j)
  Eigen::MatrixXd kappa;      ///< p x n sensor couplings
  Eigen::MatrixXd responses;  ///< n x K mode responses on the grid
  std::vector<double> time_weights;  ///< quadrature weight times w(t_k)

  std::size_t potentials() const noexcept { return std::size_t(d.rows()); }
  std::size_t channels() const noexcept { return std::size_t(kappa.rows()); }
};

/// Time grid graded with default_grading; 32 panels unless given.
RegionalModel build_regional_model(BasisPtr state_basis, BasisPtr potential_basis,
                                   const SensorSuite& suite, FracOrder alpha,
                                   double horizon, const Region& omega,
                                   Weighting weighting, int panels = 32);

/// D(q, j) = int_omega grad xi_q . grad xi_j.
Eigen::MatrixXd gradient_coupling(const Basis& potentials, const Basis& states,
                                  const Region& omega);

/// W(j, k) = int_0^b w e_j e_k on the model grid.
Eigen::MatrixXd time_gram(const RegionalModel& model);

struct GramReport {
  std::vector<Mode> potential_modes;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd eigenvalues;  ///< ascending
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  bool positive_definite = false;
  bool ill_conditioned = false;
  double tolerance = 1e-10;
};

/// Gram_{q,q'} = sum_i int w [K grad* e_q]_i [K grad* e_q']_i dt with
/// e_q = p_omega grad xi_q.
GramReport gram_regional(const RegionalModel& model);

/// Convenience overload building the model.
GramReport gram_regional(BasisPtr state_basis, const SensorSuite& suite,
                         FracOrder alpha, double horizon, const Region& omega,
                         int potential_truncation, Weighting weighting);

/// Report from an explicit symmetric matrix (spectrum and flags).
GramReport analyse_gram(Eigen::MatrixXd matrix, std::vector<Mode> modes,
                        double tolerance = 1e-10);

}  // namespace fracgrad
