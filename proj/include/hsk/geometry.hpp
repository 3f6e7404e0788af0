#pragma once

/// Flat-faced polyhedral parts: oriented faces, edge frames, and quadrature
/// over volumes, faces and edges that is exact for polynomials.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsk/fields.hpp"
#include "hsk/quadrature.hpp"
#include "hsk/tensor.hpp"

namespace hsk {

/// Local first-order description of an edge: the ordered unit-vector
/// quadruple (n', m'; n'', m'') together with the straight segment it
/// decorates. All four vectors are orthogonal to the segment direction,
/// n'.m' = 0 and n''.m'' = 0; the two pairs may be interchanged freely.
class EdgeFrame {
 public:
  EdgeFrame(const Vec3d& n_prime, const Vec3d& m_prime, const Vec3d& n_second,
            const Vec3d& m_second, const Vec3d& p0, const Vec3d& p1);

  const Vec3d& n_prime() const { return n1_; }
  const Vec3d& m_prime() const { return m1_; }
  const Vec3d& n_second() const { return n2_; }
  const Vec3d& m_second() const { return m2_; }
  const Vec3d& start() const { return p0_; }
  const Vec3d& end() const { return p1_; }

  Vec3d tangent() const { return (p1_ - p0_).normalized(); }
  Vec3d midpoint() const { return 0.5 * (p0_ + p1_); }
  double length() const { return (p1_ - p0_).norm(); }

  /// n' (x) m' + n'' (x) m''; contracting a hyperstress with this matrix
  /// gives the edge force.
  Mat3d pair_sum() const { return n1_ * m1_.transpose() + n2_ * m2_.transpose(); }

  /// Same edge with the two (n, m) pairs interchanged.
  EdgeFrame swapped() const { return EdgeFrame(n2_, m2_, n1_, m1_, p0_, p1_); }

 private:
  Vec3d n1_, m1_, n2_, m2_, p0_, p1_;
};

/// Frame of the coordinate edge where the oriented planes normal to axis j
/// and axis k meet: (e_j, e_k; e_k, e_j), running along the remaining axis.
/// Axes are zero-based and j < k is required.
EdgeFrame coordinate_edge(int j, int k);

/// Coordinate edge of an arbitrary orthonormal basis.
EdgeFrame coordinate_edge(const Basisd& basis, int j, int k);

class PolyhedralPartBuilderAccess;

/// Planar polygonal face with outward unit normal; the vertex loop is
/// counterclockwise about the normal. Triangulated by a fan for quadrature,
/// which restricts faces to convex polygons.
class OrientedFace {
 public:
  const std::vector<Vec3d>& loop() const { return loop_; }
  const Vec3d& normal() const { return normal_; }
  double area() const { return area_; }
  const std::vector<std::array<Vec3d, 3>>& triangles() const { return triangles_; }

 private:
  friend class PolyhedralPartBuilderAccess;
  std::vector<Vec3d> loop_;
  Vec3d normal_ = Vec3d::Zero();
  double area_ = 0.0;
  std::vector<std::array<Vec3d, 3>> triangles_;
};

struct PartSpec {
  std::vector<Vec3d> vertices;
  std::vector<std::vector<int>> faces;  // index loops, counterclockwise outward
};

/// Closed, consistently oriented, flat-faced subbody. Every edge is shared
/// by exactly two faces and carries a validated EdgeFrame.
class PolyhedralPart {
 public:
  const std::string& id() const { return id_; }
  const std::vector<Vec3d>& vertices() const { return vertices_; }
  const std::vector<OrientedFace>& faces() const { return faces_; }
  const std::vector<EdgeFrame>& edges() const { return edges_; }
  double volume() const { return volume_; }
  const Vec3d& centroid() const { return centroid_; }

 private:
  friend class PolyhedralPartBuilderAccess;
  std::string id_;
  std::vector<Vec3d> vertices_;
  std::vector<OrientedFace> faces_;
  std::vector<EdgeFrame> edges_;
  double volume_ = 0.0;
  Vec3d centroid_ = Vec3d::Zero();
};

/// Builds and fully validates a part: planar convex faces, manifold edges
/// with consistent orientation, positive enclosed volume. Edge frames are
/// derived from the two adjacent faces, each m pointing outward from its
/// face's interior.
PolyhedralPart build_part(const PartSpec& spec, std::string id);

// Canned part library.
PolyhedralPart unit_cube();
PolyhedralPart regular_tetrahedron();
PolyhedralPart wedge();
/// Unit cube with the corner at (1,1,1) cut off by the plane
/// x+y+z = 5/2; its triangle face and slanted edges exercise frames far
/// from the coordinate directions.
PolyhedralPart chamfered_cube();

const std::vector<std::string>& canned_part_names();
std::optional<PolyhedralPart> make_canned_part(std::string_view name);
std::vector<PolyhedralPart> canned_parts();

// ---------------------------------------------------------------------------
// Integration. The callable overloads take the exact polynomial degree of
// the integrand; the field overloads validate the declared order against
// the field's symbolic degree.

template <typename F>
  requires(!detail::is_poly_field<std::decay_t<F>>::value)
auto integrate_face(F&& f, const OrientedFace& face, int degree) {
  using T = std::invoke_result_t<F, const Vec3d&>;
  T acc = detail::CoefTraits<T>::zero();
  for (const auto& tri : face.triangles())
    acc += integrate_triangle(f, tri[0], tri[1], tri[2], degree);
  return acc;
}

template <typename F>
  requires(!detail::is_poly_field<std::decay_t<F>>::value)
auto integrate_edge(F&& f, const EdgeFrame& edge, int degree) {
  return integrate_segment(std::forward<F>(f), edge.start(), edge.end(), degree);
}

template <typename F>
  requires(!detail::is_poly_field<std::decay_t<F>>::value)
auto integrate_volume(F&& f, const PolyhedralPart& part, int degree) {
  using T = std::invoke_result_t<F, const Vec3d&>;
  T acc = detail::CoefTraits<T>::zero();
  for (const auto& face : part.faces())
    for (const auto& tri : face.triangles())
      acc += integrate_over(
          detail::tetrahedron_nodes(part.centroid(), tri[0], tri[1], tri[2], degree), f);
  return acc;
}

double integrate_volume(const ScalarField& f, const PolyhedralPart& part, int order);
double integrate_face(const ScalarField& f, const OrientedFace& face, int order);
double integrate_edge(const ScalarField& f, const EdgeFrame& edge, int order);

/// Volume quadrature nodes for a given polynomial degree; used as a sample
/// set for pointwise residuals.
std::vector<Vec3d> volume_quadrature_points(const PolyhedralPart& part, int degree);

}  // namespace hsk
