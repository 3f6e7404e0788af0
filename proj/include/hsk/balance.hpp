#pragma once

/// Numerical verification of the virtual-power balance and of the bulk and
/// boundary balances over polyhedral parts. All integrals use quadrature
/// exact for the symbolic degree of the integrand, so residuals measure
/// real defects, not discretization error.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hsk/fields.hpp"
#include "hsk/geometry.hpp"

namespace hsk {

struct FaceContribution {
  double traction_power = 0.0;       // integral of t . v
  double hypertraction_power = 0.0;  // integral of h . dv/dn
  double total() const { return traction_power + hypertraction_power; }
};

/// Structured residuals of one virtual-power verification.
struct BalanceReport {
  std::string part_id;
  std::uint64_t seed = 0;

  double internal_power = 0.0;
  double external_power = 0.0;
  double bulk_term = 0.0;  // integral of (-div(T - div H)) . v
  double pvp_residual = 0.0;
  double bulk_residual_max = 0.0;
  Vec3d global_force_residual = Vec3d::Zero();

  std::vector<FaceContribution> face_contributions;
  std::vector<double> edge_contributions;

  double tol = 0.0;
  bool pass = false;
};

/// Integral over the part of T . grad v + H . grad grad v.
double internal_power(const Tensor2Field& stress, const HyperstressField& hyperstress,
                      const VelocityField& v, const PolyhedralPart& part);

/// Boundary power: per face the traction and hypertraction terms, per edge
/// the edge-force term, all computed from the fields through the traction
/// maps. Edge integrals can be dropped to probe their necessity.
double external_power(const Tensor2Field& stress, const HyperstressField& hyperstress,
                      const VelocityField& v, const PolyhedralPart& part,
                      bool include_edge_terms = true);

/// Checks the integration-by-parts identity
///   internal = bulk term + face terms + edge terms
/// for arbitrary polynomial fields and reports the relative residual
/// |lhs - rhs| / max(|lhs|, 1). Tolerance breaches are flagged in the
/// report, not raised.
BalanceReport verify_pvp(const Tensor2Field& stress, const HyperstressField& hyperstress,
                         const VelocityField& v, const PolyhedralPart& part, double tol,
                         bool include_edge_terms = true);

/// max |div(T - div H)| over the sample points.
double bulk_residual(const Tensor2Field& stress, const HyperstressField& hyperstress,
                     std::span<const Vec3d> points);

/// Sum of all boundary forces, integral of t over the faces plus the edge
/// forces over the edges; equals the volume integral of div(T - div H), so
/// it vanishes for divergence-free reduced stress.
Vec3d global_balance(const Tensor2Field& stress, const HyperstressField& hyperstress,
                     const PolyhedralPart& part);

/// Assigned boundary data: one traction/hypertraction map per face and one
/// line-force map per edge of the part.
struct BoundaryAssignments {
  std::vector<std::function<Vec3d(const Vec3d&)>> traction;        // t0, per face
  std::vector<std::function<Vec3d(const Vec3d&)>> hypertraction;   // h0, per face
  std::vector<std::function<Vec3d(const Vec3d&)>> edge_force;      // f0, per edge
};

/// Max-norm residuals of the boundary balances, sampled on each face's and
/// edge's quadrature nodes.
struct BoundaryResiduals {
  std::vector<double> traction;       // |(T - div H) n - sdiv(..) - t0|
  std::vector<double> hypertraction;  // |(H n) n - h0|
  std::vector<double> edge;           // |f - f0|
  double max_residual() const;
};

BoundaryResiduals boundary_residuals(const Tensor2Field& stress,
                                     const HyperstressField& hyperstress,
                                     const PolyhedralPart& part,
                                     const BoundaryAssignments& assigned);

}  // namespace hsk
