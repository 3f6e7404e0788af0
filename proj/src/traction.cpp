#include "hsk/traction.hpp"

#include <cmath>
#include <stdexcept>

namespace hsk {

namespace {

void require_unit(const Vec3d& n, const char* what) {
  if (std::abs(n.norm() - 1.0) > kTol.unit_vector)
    throw std::invalid_argument(std::string(what) + ": normal is not a unit vector");
}

}  // namespace

Vec3d simple_traction(const Mat3d& stress, const Vec3d& n) {
  require_unit(n, "simple_traction");
  return stress * n;
}

Mat3d simple_stress_from_tractions(const NormalMap& t_map, const Basisd& basis) {
  Mat3d t = Mat3d::Zero();
  for (int i = 0; i < 3; ++i) {
    const Vec3d n = basis.axis(i);
    t += t_map(n) * n.transpose();
  }
  return t;
}

Vec3d surface_traction(const Tensor2Field& stress, const HyperstressField& hyperstress,
                       const Vec3d& x, const Vec3d& n) {
  require_unit(n, "surface_traction");
  const Tensor2Field reduced = stress - div(hyperstress);
  return reduced(x) * n - surface_div_flat(hyperstress, x, n);
}

Vec3d surface_hypertraction(const Tensor3Symd& hyperstress, const Vec3d& n) {
  require_unit(n, "surface_hypertraction");
  return contract2(hyperstress, (n * n.transpose()).eval());
}

Vec3d edge_force(const Tensor3Symd& hyperstress, const EdgeFrame& edge) {
  return contract2(hyperstress, edge.pair_sum());
}

Tensor3Symd reconstruct_hyperstress(const NormalMap& h_map, const EdgeMap& f_map,
                                    const Basisd& basis) {
  Tensor3Symd h = Tensor3Symd::Zero();
  for (int j = 0; j < 3; ++j) {
    const Vec3d b = basis.axis(j);
    h += Tensor3Symd::outer_sym(h_map(b), (b * b.transpose()).eval());
  }
  for (int j = 0; j < 3; ++j)
    for (int k = j + 1; k < 3; ++k) {
      const Vec3d bj = basis.axis(j);
      const Vec3d bk = basis.axis(k);
      const Mat3d pair = bj * bk.transpose() + bk * bj.transpose();
      h += 0.5 * Tensor3Symd::outer_sym(f_map(coordinate_edge(basis, j, k)), pair);
    }
  return h;
}

Mat3d reconstruct_Ttilde(const TractionMap& t_map, const HyperstressField& hyperstress,
                         const Vec3d& x, const Basisd& basis) {
  Mat3d t = Mat3d::Zero();
  for (int i = 0; i < 3; ++i) {
    const Vec3d n = basis.axis(i);
    t += (t_map(x, n) + surface_div_flat(hyperstress, x, n)) * n.transpose();
  }
  return t;
}

Mat3d reconstruct_T(const Mat3d& t_tilde, const HyperstressField& hyperstress, const Vec3d& x) {
  return t_tilde + div(hyperstress)(x);
}

}  // namespace hsk
