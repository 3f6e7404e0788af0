#pragma once

/// Gauss-type quadrature kernels, exact for polynomials up to a declared
/// total degree: Gauss-Legendre on segments, collapsed-square product rules
/// on triangles, collapsed-cube product rules on (signed) tetrahedra.

#include <functional>
#include <vector>

#include "hsk/tensor.hpp"

namespace hsk {

/// Gauss-Legendre nodes and weights on [-1, 1]; exact for degree 2n-1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

/// Nodes/weights on [0, 1].
GaussRule gauss_legendre_unit(int n);

namespace detail {

/// Quadrature nodes with weights for one 3D triangle; exact for total
/// degree <= degree. The collapsed-square map keeps exactness trivial at
/// any order.
struct WeightedPoint {
  Vec3d x;
  double w;
};

std::vector<WeightedPoint> triangle_nodes(const Vec3d& p0, const Vec3d& p1, const Vec3d& p2,
                                          int degree);

/// Signed tetrahedron (apex, p0, p1, p2): weights carry the sign of the
/// Jacobian, so summing over an outward-oriented closed triangulation
/// integrates over the enclosed volume.
std::vector<WeightedPoint> tetrahedron_nodes(const Vec3d& apex, const Vec3d& p0, const Vec3d& p1,
                                             const Vec3d& p2, int degree);

std::vector<WeightedPoint> segment_nodes(const Vec3d& a, const Vec3d& b, int degree);

}  // namespace detail

template <typename F>
auto integrate_over(const std::vector<detail::WeightedPoint>& nodes, F&& f) {
  using T = std::invoke_result_t<F, const Vec3d&>;
  T acc = detail::CoefTraits<T>::zero();
  for (const auto& n : nodes) acc += f(n.x) * n.w;
  return acc;
}

template <typename F>
auto integrate_segment(F&& f, const Vec3d& a, const Vec3d& b, int degree) {
  return integrate_over(detail::segment_nodes(a, b, degree), std::forward<F>(f));
}

template <typename F>
auto integrate_triangle(F&& f, const Vec3d& p0, const Vec3d& p1, const Vec3d& p2, int degree) {
  return integrate_over(detail::triangle_nodes(p0, p1, p2, degree), std::forward<F>(f));
}

}  // namespace hsk
