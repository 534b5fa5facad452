#include "fracgrad/special.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "fracgrad/errors.hpp"
#include "fracgrad/quadrature.hpp"

namespace fracgrad {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// Series partial sum with Neumaier compensation.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

std::string describe(MlfParams p, double z) {
  std::ostringstream os;
  os.precision(17);
  os << "(alpha=" << p.alpha << ", beta=" << p.beta << ", z=" << z << ")";
  return os.str();
}

void check_params(MlfParams p, double z) {
  if (!(p.alpha > 0.0) || !(p.beta > 0.0)) {
    throw DomainError("mlf: alpha and beta must be positive " + describe(p, z));
  }
  if (!std::isfinite(z)) {
    throw DomainError("mlf: argument must be finite " + describe(p, z));
  }
}

constexpr double kSeriesTol = 1e-13;
constexpr double kAsymptoticTol = 1e-15;
constexpr double kAsymptoticRadius = 25.0;

}  // namespace

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    std::ostringstream os;
    os << "fractional order must lie in (0, 1], got " << alpha;
    throw DomainError(os.str());
  }
}

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) {
    throw DomainError("gamma_fn: pole at non-positive integer");
  }
  if (x < 0.5) {
    return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
  }
  if (x > 171.6) return std::numeric_limits<double>::infinity();
  const double xm = x - 1.0;
  double a = kLanczosCoef[0];
  const double t = xm + kLanczosG + 0.5;
  for (int i = 1; i < 9; ++i) a += kLanczosCoef[i] / (xm + i);
  return std::sqrt(2.0 * kPi) * std::pow(t, xm + 0.5) * std::exp(-t) * a;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  if (x < 0.5) {
    return std::log(kPi / std::abs(std::sin(kPi * x))) - log_gamma(1.0 - x);
  }
  const double xm = x - 1.0;
  double a = kLanczosCoef[0];
  const double t = xm + kLanczosG + 0.5;
  for (int i = 1; i < 9; ++i) a += kLanczosCoef[i] / (xm + i);
  return 0.5 * std::log(2.0 * kPi) + (xm + 0.5) * std::log(t) - t +
         std::log(a);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 171.0) return std::exp(-log_gamma(x));
  if (x < -170.0) {
    // reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    return std::sin(kPi * x) * std::exp(log_gamma(1.0 - x)) / kPi;
  }
  return 1.0 / gamma_fn(x);
}

double mlf_series(MlfParams p, double z) {
  check_params(p, z);
  if (z == 0.0) return rgamma(p.beta);
  const int cap = z > 0.0 ? 20000 : 600;
  const double log_abs_z = std::log(std::abs(z));
  CompensatedSum acc;
  double largest = 0.0;
  double prev_mag = std::numeric_limits<double>::infinity();
  for (int k = 0; k < cap; ++k) {
    const double arg = p.alpha * k + p.beta;
    double mag;
    if (arg < 170.0) {
      mag = std::pow(std::abs(z), k) * std::abs(rgamma(arg));
    } else {
      mag = std::exp(k * log_abs_z - log_gamma(arg));
    }
    if (!std::isfinite(mag)) {
      throw AccuracyError("mlf: series overflows " + describe(p, z));
    }
    const double sign = (z < 0.0 && (k % 2 == 1)) ? -1.0 : 1.0;
    const double term = sign * mag;
    acc.add(term);
    largest = std::max(largest, mag);
    const double s = std::abs(acc.value());
    if (k > 2 && mag <= prev_mag && mag < 1e-17 * s) {
      if (largest * 1e-16 > kSeriesTol * s) {
        throw AccuracyError("mlf: series cancellation too severe " +
                            describe(p, z));
      }
      if (!std::isfinite(acc.value())) {
        throw AccuracyError("mlf: result overflows " + describe(p, z));
      }
      return acc.value();
    }
    prev_mag = mag;
  }
  throw AccuracyError("mlf: series did not converge " + describe(p, z));
}

double mlf_asymptotic(MlfParams p, double z) {
  check_params(p, z);
  if (z >= 0.0) {
    throw DomainError("mlf_asymptotic: requires negative argument " +
                      describe(p, z));
  }
  const double x = -z;
  // -sum_{k>=1} z^{-k} / Gamma(beta - alpha k), stopped where the envelope
  // |z|^{-k} Gamma(1 - beta + alpha k) / pi of the terms is smallest; the
  // terms themselves dip near poles of 1/Gamma and cannot steer truncation
  CompensatedSum acc;
  double last = std::numeric_limits<double>::infinity();
  const double log_x = std::log(x);
  double zk = 1.0;
  for (int k = 1; k <= 60; ++k) {
    const double arg = p.beta - p.alpha * k;
    const double envelope =
        arg < 1.0 ? std::exp(log_gamma(1.0 - arg) - k * log_x) / kPi
                  : std::abs(rgamma(arg)) * std::exp(-k * log_x);
    if (envelope > last) break;
    zk /= z;
    acc.add(-zk * rgamma(arg));
    last = envelope;
  }
  // alpha = 1 with integer beta: the series terminates exactly
  if (p.alpha == 1.0 && p.beta == std::floor(p.beta)) last = 0.0;
  const double value = acc.value();
  // Exponentially small contributions from the poles of s^alpha = z on the
  // neighbouring Riemann sheets (present for alpha >= 2/3 on the negative axis).
  double remainder = 0.0;
  if (p.alpha >= 2.0 / 3.0) {
    const double xr = std::pow(x, 1.0 / p.alpha);
    remainder = 2.0 / p.alpha * std::pow(xr, 1.0 - p.beta) *
                std::exp(xr * std::cos(kPi / p.alpha));
  }
  if (!std::isfinite(last)) last = 0.0;
  const double err = remainder + last;
  if (err > kAsymptoticTol * std::abs(value) + 1e-300 && err > 1e-16) {
    throw AccuracyError("mlf: asymptotic expansion not accurate " +
                        describe(p, z));
  }
  return value;
}

namespace {

// Trapezoidal rule on the parabola s(u) = N (0.1309 - 0.1194 u^2 + 0.25 i u),
// u in [-pi, pi], for the Bromwich integral of s^{alpha-beta}/(s^alpha - z)
// evaluated at t = 1.
double contour_sum(MlfParams p, double z, int n) {
  using C = std::complex<double>;
  const double h = 2.0 * kPi / n;
  double acc = 0.0;
  // the integrand is conjugate-symmetric in u; sum the upper half twice
  for (int k = 0; k < n / 2; ++k) {
    const double u = (k + 0.5) * h;
    const C s = double(n) * C(0.1309 - 0.1194 * u * u, 0.25 * u);
    const C ds = double(n) * C(-0.2388 * u, 0.25);
    const C sa = std::pow(s, p.alpha);
    const C f = std::exp(s) * std::pow(s, p.alpha - p.beta) / (sa - z) * ds;
    acc += f.imag();
  }
  // (1/(2 pi i)) * sum f h over the full contour = (h/pi) * sum Im f (upper)
  return acc * h / kPi;
}

}  // namespace

double mlf_contour(MlfParams p, double z) {
  check_params(p, z);
  if (z > 0.0) {
    throw DomainError("mlf_contour: requires non-positive argument " +
                      describe(p, z));
  }
  const double coarse = contour_sum(p, z, 32);
  const double fine = contour_sum(p, z, 40);
  const double tol = 5e-12 * std::max(std::abs(fine), 1.0);
  if (!(std::abs(fine - coarse) <= tol)) {
    throw AccuracyError("mlf: contour quadrature not converged " +
                        describe(p, z));
  }
  return fine;
}

double mlf(MlfParams p, double z) {
  check_params(p, z);
  if (p.alpha == 1.0 && p.beta == 1.0) return std::exp(z);
  if (z >= -1.0) return mlf_series(p, z);
  if (-z >= kAsymptoticRadius) {
    try {
      return mlf_asymptotic(p, z);
    } catch (const AccuracyError&) {
      // fall through to the contour
    }
  }
  return mlf_contour(p, z);
}

namespace {

// Zolotarev's integral representation of the one-sided stable density,
// accurate where the power series in theta^{-alpha} cancels (small u).
double stable_density_integral(double a, double u) {
  static const QuadratureRule rule = composite_gauss_legendre(0.0, kPi, 32, 8);
  const double c = 1.0 / (1.0 - a);
  const double scale = std::pow(u, -a * c);
  CompensatedSum acc;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double ph = rule.nodes[k];
    const double amp = std::pow(std::sin(a * ph), a * c) *
                       std::sin((1.0 - a) * ph) / std::pow(std::sin(ph), c);
    acc.add(rule.weights[k] * amp * std::exp(-amp * scale));
  }
  return a * c * std::pow(u, -c) / kPi * acc.value();
}

double phi_full(double a, double theta) {
  const double u = std::pow(theta, -1.0 / a);
  const double psi = u >= kWrightThetaMin
                         ? wright_psi(FracOrder(a), u)
                         : stable_density_integral(a, u);
  return std::pow(theta, -1.0 - 1.0 / a) * psi / a;
}

}  // namespace

double wright_psi(FracOrder order, double theta) {
  const double a = order.value();
  if (order.is_classical()) {
    throw DomainError("wright_psi: alpha = 1 has no density (Dirac limit)");
  }
  if (!(theta >= kWrightThetaMin)) {
    std::ostringstream os;
    os << "wright_psi: theta = " << theta << " below theta_min = "
       << kWrightThetaMin;
    throw DomainError(os.str());
  }
  const double log_theta = std::log(theta);
  CompensatedSum acc;
  double prev_envelope = std::numeric_limits<double>::infinity();
  double largest = 0.0;
  bool converged = false;
  for (int n = 1; n <= kWrightMaxTerms; ++n) {
    const double log_env = log_gamma(n * a + 1.0) - log_gamma(n + 1.0) -
                           (a * n + 1.0) * log_theta;
    const double env = std::exp(log_env);
    largest = std::max(largest, env);
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    acc.add(sign * env * std::sin(n * kPi * a));
    if (n > 1 && env < prev_envelope &&
        env < 1e-14 * std::abs(acc.value())) {
      converged = true;
      break;
    }
    prev_envelope = env;
  }
  // the alternating series loses digits when its terms dwarf the sum
  if (!converged || largest > 1e4 * std::abs(acc.value())) {
    return stable_density_integral(a, theta);
  }
  return acc.value() / kPi;
}

double phi_alpha(FracOrder order, double theta) {
  if (!(theta > 0.0)) throw DomainError("phi_alpha: theta must be positive");
  if (order.is_classical()) {
    throw DomainError("phi_alpha: alpha = 1 has no density (Dirac limit)");
  }
  return phi_full(order.value(), theta);
}

MomentEstimate moment_check(FracOrder order, double nu) {
  if (!(nu >= 0.0 && nu <= 4.0)) {
    throw DomainError("moment_check: nu must lie in [0, 4]");
  }
  if (order.is_classical()) {
    throw DomainError("moment_check: requires alpha < 1");
  }
  const double a = order.value();
  auto integrand = [&](double theta) {
    return std::pow(theta, nu) * phi_full(a, theta);
  };
  // march outward past the mode until the integrand is negligible
  double upper = 1.0;
  while (upper < 1e4) {
    const double v = integrand(upper);
    if (v < 1e-16 && integrand(0.5 * upper) > v) break;
    upper *= 1.25;
  }
  const double split = std::min(std::pow(kWrightThetaMin, -a), upper);
  auto integrate = [&](int panels) {
    double total = 0.0;
    for (auto [lo, hi] : {std::pair{0.0, split}, std::pair{split, upper}}) {
      if (hi <= lo) continue;
      const QuadratureRule r = composite_gauss_legendre(lo, hi, panels, 8);
      for (std::size_t k = 0; k < r.nodes.size(); ++k) {
        total += r.weights[k] * integrand(r.nodes[k]);
      }
    }
    return total;
  };
  const double coarse = integrate(24);
  const double fine = integrate(48);
  const double err = std::abs(fine - coarse);
  return MomentEstimate{fine, err, upper, err > 1e-4};
}

}  // namespace fracgrad
