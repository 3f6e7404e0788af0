#include "hsk/balance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hsk/traction.hpp"

namespace hsk {

namespace {

/// Per-face integrands share the precomputed reduced stress and the
/// gradient of (H n); the surface-divergence route is the same one used by
/// surface_div_flat.
struct FaceKernels {
  Vec3d n;
  Tensor3Field grad_hn;  // gradient of the map x -> H(x) n
  int grad_hn_degree = 0;

  Vec3d sdiv(const Vec3d& x) const { return surface_div_from_gradient(grad_hn(x), n); }
};

FaceKernels make_face_kernels(const HyperstressField& hyperstress, const OrientedFace& face) {
  FaceKernels k;
  k.n = face.normal();
  k.grad_hn = grad(apply_vector(hyperstress, k.n));
  k.grad_hn_degree = k.grad_hn.degree();
  return k;
}

struct BoundaryPower {
  std::vector<FaceContribution> faces;
  std::vector<double> edges;
  Vec3d force_sum = Vec3d::Zero();  // integral of t over faces plus edge forces

  double total(bool include_edge_terms) const {
    double sum = 0.0;
    for (const FaceContribution& c : faces) sum += c.total();
    if (include_edge_terms)
      for (double e : edges) sum += e;
    return sum;
  }
};

BoundaryPower boundary_power(const Tensor2Field& reduced, const HyperstressField& hyperstress,
                             const VelocityField& v, const PolyhedralPart& part) {
  const Tensor2Field grad_v = grad(v);
  BoundaryPower out;
  for (const OrientedFace& face : part.faces()) {
    const FaceKernels k = make_face_kernels(hyperstress, face);
    const auto traction_at = [&](const Vec3d& x) -> Vec3d { return reduced(x) * k.n - k.sdiv(x); };
    const int t_degree = std::max(reduced.degree(), k.grad_hn_degree);

    FaceContribution c;
    c.traction_power = integrate_face([&](const Vec3d& x) { return traction_at(x).dot(v(x)); },
                                      face, t_degree + v.degree());
    c.hypertraction_power = integrate_face(
        [&](const Vec3d& x) {
          return surface_hypertraction(hyperstress(x), k.n).dot(grad_v(x) * k.n);
        },
        face, hyperstress.degree() + grad_v.degree());
    out.faces.push_back(c);
    out.force_sum += integrate_face(traction_at, face, t_degree);
  }
  for (const EdgeFrame& edge : part.edges()) {
    const VectorField f = contract2(hyperstress, edge.pair_sum());
    out.edges.push_back(integrate_edge([&](const Vec3d& x) { return f(x).dot(v(x)); }, edge,
                                       f.degree() + v.degree()));
    out.force_sum += integrate_edge([&](const Vec3d& x) { return f(x); }, edge, f.degree());
  }
  return out;
}

}  // namespace

double internal_power(const Tensor2Field& stress, const HyperstressField& hyperstress,
                      const VelocityField& v, const PolyhedralPart& part) {
  const Tensor2Field grad_v = grad(v);
  const PolyField<Tensor3Symd> grad2_v = grad2_velocity(v);
  const int degree = std::max(stress.degree() + grad_v.degree(),
                              hyperstress.degree() + grad2_v.degree());
  return integrate_volume(
      [&](const Vec3d& x) { return inner(stress(x), grad_v(x)) + inner(hyperstress(x), grad2_v(x)); },
      part, degree);
}

double external_power(const Tensor2Field& stress, const HyperstressField& hyperstress,
                      const VelocityField& v, const PolyhedralPart& part,
                      bool include_edge_terms) {
  const Tensor2Field reduced = stress - div(hyperstress);
  return boundary_power(reduced, hyperstress, v, part).total(include_edge_terms);
}

BalanceReport verify_pvp(const Tensor2Field& stress, const HyperstressField& hyperstress,
                         const VelocityField& v, const PolyhedralPart& part, double tol,
                         bool include_edge_terms) {
  if (tol <= 0.0) throw std::invalid_argument("verify_pvp: tolerance must be positive");

  BalanceReport report;
  report.part_id = part.id();
  report.tol = tol;

  const Tensor2Field reduced = stress - div(hyperstress);  // T - div H
  const VectorField div_reduced = div(reduced);

  report.internal_power = internal_power(stress, hyperstress, v, part);

  report.bulk_term = integrate_volume(
      [&](const Vec3d& x) { return -div_reduced(x).dot(v(x)); }, part,
      div_reduced.degree() + v.degree());

  BoundaryPower boundary = boundary_power(reduced, hyperstress, v, part);
  report.external_power = boundary.total(include_edge_terms);
  report.face_contributions = std::move(boundary.faces);
  report.edge_contributions = std::move(boundary.edges);

  report.pvp_residual =
      std::abs(report.internal_power - (report.bulk_term + report.external_power)) /
      std::max(std::abs(report.internal_power), 1.0);

  const std::vector<Vec3d> pts = volume_quadrature_points(part, div_reduced.degree());
  report.bulk_residual_max = bulk_residual(stress, hyperstress, pts);
  report.global_force_residual = boundary.force_sum;

  report.pass = report.pvp_residual <= tol;
  return report;
}

double bulk_residual(const Tensor2Field& stress, const HyperstressField& hyperstress,
                     std::span<const Vec3d> points) {
  const VectorField div_reduced = div(stress - div(hyperstress));
  double r = 0.0;
  for (const Vec3d& x : points) r = std::max(r, div_reduced(x).norm());
  return r;
}

Vec3d global_balance(const Tensor2Field& stress, const HyperstressField& hyperstress,
                     const PolyhedralPart& part) {
  const Tensor2Field reduced = stress - div(hyperstress);
  Vec3d sum = Vec3d::Zero();
  for (const OrientedFace& face : part.faces()) {
    const FaceKernels k = make_face_kernels(hyperstress, face);
    sum += integrate_face([&](const Vec3d& x) -> Vec3d { return reduced(x) * k.n - k.sdiv(x); },
                          face, std::max(reduced.degree(), k.grad_hn_degree));
  }
  for (const EdgeFrame& edge : part.edges()) {
    const VectorField f = contract2(hyperstress, edge.pair_sum());
    sum += integrate_edge([&](const Vec3d& x) { return f(x); }, edge, f.degree());
  }
  return sum;
}

double BoundaryResiduals::max_residual() const {
  double r = 0.0;
  for (double x : traction) r = std::max(r, x);
  for (double x : hypertraction) r = std::max(r, x);
  for (double x : edge) r = std::max(r, x);
  return r;
}

BoundaryResiduals boundary_residuals(const Tensor2Field& stress,
                                     const HyperstressField& hyperstress,
                                     const PolyhedralPart& part,
                                     const BoundaryAssignments& assigned) {
  if (assigned.traction.size() != part.faces().size() ||
      assigned.hypertraction.size() != part.faces().size() ||
      assigned.edge_force.size() != part.edges().size())
    throw std::invalid_argument("boundary_residuals: one assignment per face and per edge");

  const Tensor2Field reduced = stress - div(hyperstress);
  BoundaryResiduals out;

  for (std::size_t fi = 0; fi < part.faces().size(); ++fi) {
    const OrientedFace& face = part.faces()[fi];
    const FaceKernels k = make_face_kernels(hyperstress, face);
    double rt = 0.0, rh = 0.0;
    const int degree = std::max({reduced.degree(), k.grad_hn_degree, hyperstress.degree()}) + 1;
    for (const auto& tri : face.triangles())
      for (const auto& wp : detail::triangle_nodes(tri[0], tri[1], tri[2], degree)) {
        const Vec3d t = reduced(wp.x) * k.n - k.sdiv(wp.x);
        const Vec3d h = surface_hypertraction(hyperstress(wp.x), k.n);
        rt = std::max(rt, (t - assigned.traction[fi](wp.x)).norm());
        rh = std::max(rh, (h - assigned.hypertraction[fi](wp.x)).norm());
      }
    out.traction.push_back(rt);
    out.hypertraction.push_back(rh);
  }

  for (std::size_t ei = 0; ei < part.edges().size(); ++ei) {
    const EdgeFrame& edge = part.edges()[ei];
    const VectorField f = contract2(hyperstress, edge.pair_sum());
    double re = 0.0;
    for (const auto& wp : detail::segment_nodes(edge.start(), edge.end(), f.degree() + 1))
      re = std::max(re, (f(wp.x) - assigned.edge_force[ei](wp.x)).norm());
    out.edge.push_back(re);
  }

  return out;
}

}  // namespace hsk
