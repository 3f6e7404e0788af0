#include "hsk/special.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hsk {

namespace {

void complement_axes(int axis, int& j, int& k) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("edge scan: axis must be 0, 1 or 2");
  j = axis == 0 ? 1 : 0;
  k = axis == 2 ? 1 : 2;
}

}  // namespace

SphericalClassification classify_spherical(const Tensor3Symd& hyperstress, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("classify_spherical: tolerance must be positive");
  const Vec3d h = contract2(hyperstress, Mat3d(Mat3d::Identity())) / 3.0;  // 3h = H[I]
  SphericalClassification out;
  out.residual = (hyperstress - Tensor3Symd::spherical(h)).max_abs();
  if (out.residual <= tol) out.h = h;
  return out;
}

std::vector<EdgeScanSample> edge_scan(const Tensor3Symd& hyperstress, int axis,
                                      std::span<const double> thetas) {
  int j, k;
  complement_axes(axis, j, k);
  const Mat3d id = Mat3d::Identity();
  const Vec3d ej = id.col(j), ek = id.col(k);
  const Vec3d hj = contract2(hyperstress, (ej * ej.transpose()).eval());
  const Vec3d hk = contract2(hyperstress, (ek * ek.transpose()).eval());
  const Vec3d fjk =
      contract2(hyperstress, (ej * ek.transpose() + ek * ej.transpose()).eval());
  std::vector<EdgeScanSample> out;
  out.reserve(thetas.size());
  for (double theta : thetas)
    out.push_back({theta, std::sin(2.0 * theta) * (hk - hj) + std::cos(2.0 * theta) * fjk});
  return out;
}

Vec3d rotated_pair_edge_force(const Tensor3Symd& hyperstress, int axis, double theta) {
  int j, k;
  complement_axes(axis, j, k);
  const Mat3d id = Mat3d::Identity();
  const Vec3d bj = std::cos(theta) * id.col(j) + std::sin(theta) * id.col(k);
  const Vec3d bk = -std::sin(theta) * id.col(j) + std::cos(theta) * id.col(k);
  return contract2(hyperstress, (bj * bk.transpose() + bk * bj.transpose()).eval());
}

EdgeFrame rotated_coordinate_edge(int axis, double theta) {
  int j, k;
  complement_axes(axis, j, k);
  const Mat3d id = Mat3d::Identity();
  const Vec3d bj = std::cos(theta) * id.col(j) + std::sin(theta) * id.col(k);
  const Vec3d bk = -std::sin(theta) * id.col(j) + std::cos(theta) * id.col(k);
  return EdgeFrame(bj, bk, bk, bj, Vec3d::Zero(), id.col(axis));
}

Vec3d prove_spherical_from_zero_edges(const NormalMap& h_map, const EdgeMap& f_map, double tol) {
  if (tol <= 0.0)
    throw std::invalid_argument("prove_spherical_from_zero_edges: tolerance must be positive");

  const auto probe = [&](const EdgeFrame& frame, const std::string& name) {
    const double magnitude = f_map(frame).norm();
    if (magnitude > tol)
      throw std::runtime_error("prove_spherical_from_zero_edges: probe '" + name +
                               "' has edge force of magnitude " + std::to_string(magnitude));
  };

  probe(coordinate_edge(0, 1), "coordinate edge 01");
  probe(coordinate_edge(0, 2), "coordinate edge 02");
  probe(coordinate_edge(1, 2), "coordinate edge 12");
  // Rotating the (0,1) pair detects h_0 != h_1; rotating the (1,2) pair
  // detects h_1 != h_2. pi/4 maximizes the sin(2 theta) sensitivity.
  probe(rotated_coordinate_edge(2, std::numbers::pi / 4.0), "rotated edge about axis 2");
  probe(rotated_coordinate_edge(0, std::numbers::pi / 4.0), "rotated edge about axis 0");

  const Mat3d id = Mat3d::Identity();
  const Vec3d h0 = h_map(id.col(0));
  const Vec3d h1 = h_map(id.col(1));
  const Vec3d h2 = h_map(id.col(2));
  for (const auto& [a, b] : {std::pair{h0, h1}, std::pair{h1, h2}, std::pair{h0, h2}})
    if ((a - b).cwiseAbs().maxCoeff() > tol)
      throw std::runtime_error(
          "prove_spherical_from_zero_edges: diffuse hypertractions on the coordinate planes "
          "disagree");
  return (h0 + h1 + h2) / 3.0;
}

ForteVianelloResult forte_vianello_check(const Tensor3Symd& hyperstress, const Vec3d& w,
                                         double tol) {
  Mat3d wh = Mat3d::Zero();  // (wH)_jk = w_i H_ijk
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i) wh(j, k) += w[i] * hyperstress(i, j, k);
  ForteVianelloResult out;
  out.lambda = wh.trace() / 3.0;
  out.residual = (wh - out.lambda * Mat3d::Identity()).cwiseAbs().maxCoeff();
  out.spherical_consistent = out.residual <= tol;
  return out;
}

NsAlphaDecomposition nsalpha_decompose(const Vec3d& g) {
  NsAlphaDecomposition out;
  out.g = g;
  Tensor3Symd reactive;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = j; k < 3; ++k) {
        const double v = 0.5 * ((i == j ? g[k] : 0.0) + (i == k ? g[j] : 0.0));
        reactive.set(i, j, k, v);
      }
  out.reactive = reactive;
  out.active = Tensor3Symd::spherical(-g);
  return out;
}

NsAlphaPowerResiduals nsalpha_power_check(const Vec3d& g, const VelocityField& v, const Vec3d& x) {
  const NsAlphaDecomposition d = nsalpha_decompose(g);
  const Tensor3Symd grad2_v = grad2_velocity(v)(x);
  const Vec3d curl_curl = curl(curl(v))(x);
  NsAlphaPowerResiduals out;
  out.full = std::abs(inner(d.reactive + d.active, grad2_v) - g.dot(curl_curl));
  if (is_divergence_free(v)) out.divfree = std::abs(g.dot(curl_curl) + g.dot(laplacian(v)(x)));
  return out;
}

Vec3d nsalpha_constitutive(double zeta, const VelocityField& v, const Vec3d& x) {
  if (zeta <= 0.0) throw std::invalid_argument("nsalpha_constitutive: zeta must be positive");
  return zeta * laplacian(v)(x);
}

void write_scan_csv(std::ostream& os, std::span<const EdgeScanSample> samples) {
  os << "theta,f_x,f_y,f_z\n";
  char line[160];
  for (const EdgeScanSample& s : samples) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", s.theta, s.force[0],
                  s.force[1], s.force[2]);
    os << line;
  }
}

}  // namespace hsk
