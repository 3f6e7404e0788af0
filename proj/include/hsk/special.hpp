#pragma once

/// Hyperstresses with no edge forces: classification of the spherical form
/// h (x) I in both directions, the rotation-scan argument behind it, the
/// diagonal-form alternative test, and the Navier-Stokes-alpha hyperstress
/// decomposition.

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hsk/fields.hpp"
#include "hsk/geometry.hpp"
#include "hsk/tensor.hpp"
#include "hsk/traction.hpp"

namespace hsk {

/// H = h (x) I, the only hyperstress form with zero force on every edge.
struct SphericalHyperstress {
  Vec3d h = Vec3d::Zero();
  Tensor3Symd tensor() const { return Tensor3Symd::spherical(h); }
};

struct SphericalClassification {
  std::optional<Vec3d> h;  // set iff residual <= tol
  double residual = 0.0;   // max-abs of H - (H[I]/3) (x) I over the 18 components
};

/// Extracts h = H[I]/3 and measures the deviation from h (x) I.
SphericalClassification classify_spherical(const Tensor3Symd& hyperstress, double tol);

struct EdgeScanSample {
  double theta = 0.0;
  Vec3d force = Vec3d::Zero();
};

/// Edge force on the coordinate edge of the pair (j, k) complementary to
/// `axis`, after rotating that pair in its own plane by theta:
///   f(theta) = sin(2 theta) (h_k - h_j) + cos(2 theta) f_jk.
/// Closed form of the rotation scan; agrees with rotating the basis and
/// contracting directly.
std::vector<EdgeScanSample> edge_scan(const Tensor3Symd& hyperstress, int axis,
                                      std::span<const double> thetas);

/// Direct evaluation used as the scan's independent route: builds the
/// rotated pair and contracts, f = H[e_j(theta) (x) e_k(theta) + transpose].
Vec3d rotated_pair_edge_force(const Tensor3Symd& hyperstress, int axis, double theta);

/// The rotated coordinate edge itself, for probing edge-force maps.
EdgeFrame rotated_coordinate_edge(int axis, double theta);

/// Forward classification from maps alone. Probes the three coordinate
/// edges plus the pi/4-rotated edges about axis 2 and axis 0; any probe
/// above tol throws with the probe's name and magnitude. On success the
/// diffuse hypertractions on the three coordinate planes must agree, and
/// their common value is returned.
Vec3d prove_spherical_from_zero_edges(const NormalMap& h_map, const EdgeMap& f_map, double tol);

/// Diagonal-form test: w H must equal lambda(w) I for every w when edge
/// forces vanish, with lambda(w) = h . w.
struct ForteVianelloResult {
  double lambda = 0.0;
  double residual = 0.0;  // max-abs of wH - lambda I
  bool spherical_consistent = false;
};

ForteVianelloResult forte_vianello_check(const Tensor3Symd& hyperstress, const Vec3d& w,
                                         double tol);

/// Navier-Stokes-alpha split: a reactive part tied to incompressibility and
/// an active spherical part -g (x) I that produces no edge forces.
struct NsAlphaDecomposition {
  Tensor3Symd reactive;  // (H1)_ijk = (d_ij g_k + d_ik g_j) / 2
  Tensor3Symd active;    // H2 = -g (x) I
  Vec3d g = Vec3d::Zero();
};

NsAlphaDecomposition nsalpha_decompose(const Vec3d& g);

struct NsAlphaPowerResiduals {
  double full = 0.0;  // |(H1 + H2) . grad grad v - g . curl curl v|
  std::optional<double> divfree;  // |g . curl curl v + g . lap v|, when div v = 0
};

NsAlphaPowerResiduals nsalpha_power_check(const Vec3d& g, const VelocityField& v, const Vec3d& x);

/// g = zeta lap v, the simplest constitutive choice; zeta must be positive.
Vec3d nsalpha_constitutive(double zeta, const VelocityField& v, const Vec3d& x);

/// CSV rows "theta,fx,fy,fz" for external plotting.
void write_scan_csv(std::ostream& os, std::span<const EdgeScanSample> samples);

}  // namespace hsk
