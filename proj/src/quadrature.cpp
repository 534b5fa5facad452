#include "fracgrad/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "fracgrad/errors.hpp"

namespace fracgrad {

double QuadratureRule::weight_sum() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

void QuadratureRule::append(const QuadratureRule& other) {
  nodes.insert(nodes.end(), other.nodes.begin(), other.nodes.end());
  weights.insert(weights.end(), other.weights.begin(), other.weights.end());
}

namespace {

QuadratureRule compute_gauss_legendre(int n) {
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged root
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

constexpr double kGeometricRatio = 0.25;

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

QuadratureRule composite_gauss_legendre(double a, double b, int panels, int n) {
  if (panels < 1) throw DomainError("composite_gauss_legendre: panels < 1");
  if (!(b > a)) throw DomainError("composite_gauss_legendre: need a < b");
  const QuadratureRule ref = gauss_legendre(n);
  QuadratureRule r;
  r.nodes.reserve(panels * n);
  r.weights.reserve(panels * n);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    for (int k = 0; k < n; ++k) {
      r.nodes.push_back(mid + 0.5 * h * ref.nodes[k]);
      r.weights.push_back(0.5 * h * ref.weights[k]);
    }
  }
  return r;
}

QuadratureRule graded_gauss_legendre(double a, double b, int panels, int n,
                                     int q, int levels) {
  if (q < 1) throw DomainError("graded_gauss_legendre: grading exponent < 1");
  if (!(b > a)) throw DomainError("graded_gauss_legendre: need a < b");
  if (levels < 0) throw DomainError("graded_gauss_legendre: levels < 0");
  QuadratureRule v = composite_gauss_legendre(0.0, 1.0, panels, n);
  if (levels > 0) {
    const QuadratureRule ref = gauss_legendre(n);
    QuadratureRule g;
    const double h = 1.0 / panels;
    for (int l = levels; l >= 0; --l) {
      const double hi = h * std::pow(kGeometricRatio, l);
      const double lo = l < levels ? hi * kGeometricRatio : 0.0;
      for (int k = 0; k < n; ++k) {
        g.nodes.push_back(0.5 * (lo + hi) + 0.5 * (hi - lo) * ref.nodes[k]);
        g.weights.push_back(0.5 * (hi - lo) * ref.weights[k]);
      }
    }
    g.nodes.insert(g.nodes.end(), v.nodes.begin() + n, v.nodes.end());
    g.weights.insert(g.weights.end(), v.weights.begin() + n, v.weights.end());
    v = std::move(g);
  }
  const double len = b - a;
  QuadratureRule r;
  r.nodes.resize(v.size());
  r.weights.resize(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double vq1 = std::pow(v.nodes[k], q - 1);
    r.nodes[k] = a + len * vq1 * v.nodes[k];
    r.weights[k] = len * q * vq1 * v.weights[k];
  }
  return r;
}

QuadratureRule graded_gauss_legendre_upper(double a, double b, int panels,
                                           int n, int q) {
  const QuadratureRule lower = graded_gauss_legendre(0.0, b - a, panels, n, q);
  QuadratureRule r;
  const std::size_t m = lower.size();
  r.nodes.resize(m);
  r.weights.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    r.nodes[k] = b - lower.nodes[m - 1 - k];
    r.weights[k] = lower.weights[m - 1 - k];
  }
  return r;
}

QuadratureRule two_sided_graded(double a, double b, int panels_per_half,
                                int n, int q, int levels) {
  const double mid = 0.5 * (a + b);
  QuadratureRule r = graded_gauss_legendre(a, mid, panels_per_half, n, q, levels);
  const QuadratureRule left = r;
  const std::size_t m = left.size();
  // mirror image of the left half, so the rule is exactly symmetric
  for (std::size_t k = 0; k < m; ++k) {
    r.nodes.push_back(a + b - left.nodes[m - 1 - k]);
    r.weights.push_back(left.weights[m - 1 - k]);
  }
  return r;
}

}  // namespace fracgrad
