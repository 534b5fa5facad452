#include "fracgrad/observability.hpp"

#include <algorithm>
#include <cmath>

#include "fracgrad/errors.hpp"

namespace fracgrad {

GMatrixSet build_g_matrices(BasisPtr basis, const SensorSuite& suite) {
  if (basis->dimension() != suite.dimension()) {
    throw DomainError("build_g_matrices: basis and suite dimensions differ");
  }
  GMatrixSet set;
  const Eigen::Index p = Eigen::Index(suite.size());
  for (const EigenGroup& g : basis->groups()) {
    std::array<Eigen::MatrixXd, 2> mats;
    for (int s = 0; s < 2; ++s) {
      if (s >= basis->dimension()) continue;
      Eigen::MatrixXd m(p, g.multiplicity());
      for (Eigen::Index i = 0; i < p; ++i) {
        for (int k = 0; k < g.multiplicity(); ++k) {
          m(i, k) = grad_coupling(suite[std::size_t(i)],
                                  basis->modes()[g.members[std::size_t(k)]], s);
        }
      }
      mats[std::size_t(s)] = std::move(m);
    }
    set.matrices.push_back(std::move(mats));
  }
  set.basis = std::move(basis);
  return set;
}

int numerical_rank(const Eigen::MatrixXd& m, double rel_tol, double scale) {
  if (m.size() == 0) return 0;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd sv = svd.singularValues();
  const double ref = std::max(sv.size() ? sv[0] : 0.0, scale);
  if (ref == 0.0) return 0;
  int r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv[k] > rel_tol * ref) ++r;
  }
  return r;
}

StrategicReport strategic_test_1d(const GMatrixSet& gset, std::size_t p,
                                  int r_max) {
  if (!gset.basis || gset.basis->dimension() != 1) {
    throw DomainError("strategic_test_1d: requires a one-dimensional basis");
  }
  StrategicReport rep;
  rep.truncation = gset.basis->truncation();
  rep.sensors = p;
  rep.r_max = r_max;
  double norm = 0.0;
  for (const auto& mats : gset.matrices) norm = std::max(norm, mats[0].norm());
  const auto& groups = gset.basis->groups();
  bool ranks_ok = true;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    const int rj = groups[j].multiplicity();
    const int rank = numerical_rank(gset.matrices[j][0], 1e-10, norm);
    rep.ranks.push_back(rank);
    rep.multiplicities.push_back(rj);
    if (rank != rj && ranks_ok) {
      ranks_ok = false;
      rep.offending_group = j + 1;
    }
  }
  const bool enough = p >= std::size_t(std::max(r_max, 0));
  rep.strategic = enough && ranks_ok;
  if (!enough) {
    rep.reason = "fewer sensors than the largest multiplicity";
  } else if (!ranks_ok) {
    rep.reason = "rank deficient G matrix";
  } else {
    rep.reason = "strategic at truncation " + std::to_string(rep.truncation);
  }
  return rep;
}

KernelTestResult kernel_test(const VectorFieldSamples& g, BasisPtr basis,
                             const SensorSuite& suite, FracOrder alpha,
                             const Region& omega, const TimeGrid& grid) {
  const VectorFieldSamples restricted = restrict_to(g, omega);
  SpectralField state = grad_adjoint(restricted, basis);
  const Eigen::MatrixXd kappa = coupling_matrix(suite, *basis);
  const Eigen::MatrixXd resp = response_table(*basis, alpha, grid);
  ObservationRecord rec =
      simulate(state.coefficients(), kappa, resp, grid, std::nullopt);
  double sup = 0.0;
  for (const auto& ch : rec.channels) {
    for (double v : ch) sup = std::max(sup, std::abs(v));
  }
  double kappa_row = 0.0;
  for (Eigen::Index i = 0; i < kappa.rows(); ++i) {
    kappa_row = std::max(kappa_row, kappa.row(i).norm());
  }
  const double scale =
      state.coefficients().norm() * kappa_row * resp.cwiseAbs().maxCoeff();
  KernelTestResult out{sup <= 1e-9 * scale, sup, scale, std::move(state),
                       std::move(rec)};
  return out;
}

Eigen::MatrixXd gradient_coupling(const Basis& potentials, const Basis& states,
                                  const Region& omega) {
  if (potentials.dimension() != states.dimension() ||
      omega.dimension() != states.dimension()) {
    throw DomainError("gradient_coupling: dimension mismatch");
  }
  const int res = std::max(potentials.truncation(), states.truncation());
  const QuadGrid grid = region_grid(omega, res);
  const std::size_t nq = potentials.size();
  const std::size_t nj = states.size();
  std::vector<Vec2> gq(nq * grid.size());
  std::vector<Vec2> gj(nj * grid.size());
  for (std::size_t q = 0; q < nq; ++q) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
      gq[q * grid.size() + k] = potentials.modes()[q].gradient(grid.nodes[k]);
    }
  }
  for (std::size_t j = 0; j < nj; ++j) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
      gj[j * grid.size() + k] = states.modes()[j].gradient(grid.nodes[k]);
    }
  }
  Eigen::MatrixXd d(static_cast<Eigen::Index>(nq), static_cast<Eigen::Index>(nj));
  for (std::size_t q = 0; q < nq; ++q) {
    for (std::size_t j = 0; j < nj; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const Vec2& a = gq[q * grid.size() + k];
        const Vec2& b = gj[j * grid.size() + k];
        s += grid.weights[k] * (a[0] * b[0] + a[1] * b[1]);
      }
      d(Eigen::Index(q), Eigen::Index(j)) = s;
    }
  }
  return d;
}

RegionalModel build_regional_model(BasisPtr state_basis, BasisPtr potential_basis,
                                   const SensorSuite& suite, FracOrder alpha,
                                   double horizon, const Region& omega,
                                   Weighting weighting, int panels) {
  require_square_integrable(alpha, weighting);
  TimeGrid grid = TimeGrid::graded(alpha, horizon, panels,
                                   default_grading(alpha, weighting));
  std::vector<double> tw(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    tw[k] = grid.weights()[k] * time_weight(alpha, weighting, grid.nodes()[k]);
  }
  Eigen::MatrixXd d = gradient_coupling(*potential_basis, *state_basis, omega);
  Eigen::MatrixXd kappa = coupling_matrix(suite, *state_basis);
  Eigen::MatrixXd resp = response_table(*state_basis, alpha, grid);
  return RegionalModel{std::move(state_basis), std::move(potential_basis),
                       omega, alpha, weighting, std::move(grid), std::move(d),
                       std::move(kappa), std::move(resp), std::move(tw)};
}

Eigen::MatrixXd time_gram(const RegionalModel& model) {
  const Eigen::Map<const Eigen::VectorXd> w(model.time_weights.data(),
                                           Eigen::Index(model.time_weights.size()));
  return model.responses * w.asDiagonal() * model.responses.transpose();
}

GramReport analyse_gram(Eigen::MatrixXd matrix, std::vector<Mode> modes,
                        double tolerance) {
  GramReport rep;
  rep.tolerance = tolerance;
  rep.potential_modes = std::move(modes);
  rep.matrix = 0.5 * (matrix + matrix.transpose());
  if (rep.matrix.size() == 0) return rep;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rep.matrix,
                                                          Eigen::EigenvaluesOnly);
  rep.eigenvalues = es.eigenvalues();
  rep.min_eigenvalue = rep.eigenvalues[0];
  rep.max_eigenvalue = rep.eigenvalues[rep.eigenvalues.size() - 1];
  const double scale = std::max(std::abs(rep.max_eigenvalue), std::abs(rep.min_eigenvalue));
  rep.positive_definite = scale > 0.0 && rep.min_eigenvalue > tolerance * scale;
  rep.ill_conditioned =
      !(rep.min_eigenvalue > 0.0) || rep.max_eigenvalue / rep.min_eigenvalue > 1e12;
  return rep;
}

GramReport gram_regional(const RegionalModel& model) {
  const Eigen::MatrixXd w = time_gram(model);
  const Eigen::MatrixXd kk = model.kappa.transpose() * model.kappa;
  const Eigen::MatrixXd inner = kk.cwiseProduct(w);
  Eigen::MatrixXd gram = model.d * inner * model.d.transpose();
  return analyse_gram(std::move(gram), model.potential_basis->modes());
}

GramReport gram_regional(BasisPtr state_basis, const SensorSuite& suite,
                         FracOrder alpha, double horizon, const Region& omega,
                         int potential_truncation, Weighting weighting) {
  BasisPtr potentials =
      build_basis(state_basis->dimension(), potential_truncation);
  return gram_regional(build_regional_model(std::move(state_basis),
                                            std::move(potentials), suite, alpha,
                                            horizon, omega, weighting));
}

}  // namespace fracgrad
