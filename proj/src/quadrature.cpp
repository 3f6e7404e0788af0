#include "hsk/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsk {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n from the usual Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

GaussRule gauss_legendre_unit(int n) {
  GaussRule rule = gauss_legendre(n);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    rule.nodes[i] = 0.5 * (rule.nodes[i] + 1.0);
    rule.weights[i] *= 0.5;
  }
  return rule;
}

namespace detail {

std::vector<WeightedPoint> segment_nodes(const Vec3d& a, const Vec3d& b, int degree) {
  const int n = std::max(1, degree / 2 + 1);  // 2n-1 >= degree
  const GaussRule g = gauss_legendre(n);
  const Vec3d mid = 0.5 * (a + b);
  const Vec3d half = 0.5 * (b - a);
  const double scale = half.norm();
  std::vector<WeightedPoint> pts;
  pts.reserve(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    pts.push_back({mid + g.nodes[i] * half, g.weights[i] * scale});
  return pts;
}

std::vector<WeightedPoint> triangle_nodes(const Vec3d& p0, const Vec3d& p1, const Vec3d& p2,
                                          int degree) {
  // Collapse [0,1]^2 onto the reference triangle: (u, v) = (a, b(1-a)),
  // Jacobian (1-a). Degree in a rises by one, hence the extra node.
  const int n = std::max(1, degree / 2 + 2);
  const GaussRule g = gauss_legendre_unit(n);
  const Vec3d e1 = p1 - p0;
  const Vec3d e2 = p2 - p0;
  const double two_area = e1.cross(e2).norm();
  std::vector<WeightedPoint> pts;
  pts.reserve(g.nodes.size() * g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const double a = g.nodes[i];
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      const double b = g.nodes[j];
      const double u = a;
      const double v = b * (1.0 - a);
      pts.push_back({p0 + u * e1 + v * e2, g.weights[i] * g.weights[j] * (1.0 - a) * two_area});
    }
  }
  return pts;
}

std::vector<WeightedPoint> tetrahedron_nodes(const Vec3d& apex, const Vec3d& p0, const Vec3d& p1,
                                             const Vec3d& p2, int degree) {
  // Collapse [0,1]^3 onto the reference tetrahedron:
  // (xi, eta, zeta) = (a, b(1-a), c(1-a)(1-b)), Jacobian (1-a)^2 (1-b).
  const int n = std::max(1, degree / 2 + 2);
  const GaussRule g = gauss_legendre_unit(n);
  const Vec3d u0 = p0 - apex;
  const Vec3d u1 = p1 - apex;
  const Vec3d u2 = p2 - apex;
  Mat3d e;
  e << u0, u1, u2;
  const double jac = e.determinant();  // signed
  std::vector<WeightedPoint> pts;
  pts.reserve(g.nodes.size() * g.nodes.size() * g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const double a = g.nodes[i];
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      const double b = g.nodes[j];
      for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const double c = g.nodes[k];
        const double xi = a;
        const double eta = b * (1.0 - a);
        const double zeta = c * (1.0 - a) * (1.0 - b);
        const double w =
            g.weights[i] * g.weights[j] * g.weights[k] * (1.0 - a) * (1.0 - a) * (1.0 - b) * jac;
        pts.push_back({apex + xi * u0 + eta * u1 + zeta * u2, w});
      }
    }
  }
  return pts;
}

}  // namespace detail

}  // namespace hsk
