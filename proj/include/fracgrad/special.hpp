#pragma once

// Gamma, two-parameter Mittag-Leffler, and the Wright-type density that
// subordinates the fractional solution operator to the heat semigroup.

namespace fracgrad {

/// Fractional order of the time derivative, 0 < alpha <= 1.
class FracOrder {
 public:
  explicit FracOrder(double alpha);
  double value() const noexcept { return alpha_; }
  bool is_classical() const noexcept { return alpha_ == 1.0; }

 private:
  double alpha_;
};

struct MlfParams {
  double alpha;
  double beta;
};

/// Lanczos approximation (g = 7, 9 terms) with reflection for x < 1/2.
double gamma_fn(double x);
/// log|Gamma(x)| for x > 0.
double log_gamma(double x);
/// 1/Gamma(x); exactly zero at the poles x = 0, -1, -2, ...
double rgamma(double x);

/// E_{alpha,beta}(z) for real z <= 5 (any negative z).
///
/// Regimes:
///  - z >= -1: power series with compensated summation (log-space terms once
///    Gamma overflows);
///  - z <= -25 when the truncated asymptotic series and the neglected
///    exponentially small terms are both below 1e-15: asymptotic expansion;
///  - otherwise: trapezoidal rule on a parabolic Bromwich contour, evaluated
///    at two node counts whose agreement certifies the result.
///
/// Throws DomainError for alpha <= 0, beta <= 0 or non-finite z, and
/// AccuracyError if no regime meets the tolerance (e.g. overflow).
double mlf(MlfParams params, double z);

/// Components of mlf, exposed for cross-checking the regimes against each
/// other. Each throws AccuracyError when it cannot reach 1e-13 relative.
double mlf_series(MlfParams params, double z);
double mlf_asymptotic(MlfParams params, double z);
double mlf_contour(MlfParams params, double z);

inline constexpr double kWrightThetaMin = 0.05;
inline constexpr int kWrightMaxTerms = 500;

/// psi_alpha(theta) = 1/pi sum_{n>=1} (-1)^{n-1} theta^{-alpha n - 1}
///                    Gamma(n alpha + 1)/n! sin(n pi alpha),
/// the one-sided stable density. Requires alpha < 1 and theta >= 0.05. Where
/// the alternating series cancels badly, Zolotarev's integral is used instead.
double wright_psi(FracOrder alpha, double theta);

/// phi_alpha(theta) = (1/alpha) theta^{-1-1/alpha} psi_alpha(theta^{-1/alpha}),
/// for every theta > 0 (large theta goes through Zolotarev's integral).
double phi_alpha(FracOrder alpha, double theta);

struct MomentEstimate {
  double value;
  double error_estimate;  ///< |coarse - fine| quadrature difference
  double upper_limit;     ///< theta where the integrand was truncated
  bool accuracy_warning;  ///< error_estimate > 1e-4
};

/// Quadrature of int_0^inf theta^nu phi_alpha(theta) dtheta for nu in [0, 4].
MomentEstimate moment_check(FracOrder alpha, double nu);

}  // namespace fracgrad
