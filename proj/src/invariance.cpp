#include "hsk/invariance.hpp"

#include <cmath>
#include <stdexcept>

#include "hsk/traction.hpp"

namespace hsk {

ObserverChange::ObserverChange(const Vec3d& q_dot, const Rotationd& q, const Mat3d& w)
    : q_dot_(q_dot), q_(q), w_(w) {
  if ((w + w.transpose()).cwiseAbs().maxCoeff() > kTol.skew)
    throw std::invalid_argument("ObserverChange: spin must be skew-symmetric");
}

ObserverChange ObserverChange::identity() {
  return ObserverChange(Vec3d::Zero(), Rotationd::identity(), Mat3d::Zero());
}

Vec3d transform_velocity(const Vec3d& v, const Vec3d& x_plus, const ObserverChange& obs) {
  return obs.q_dot() + obs.q().matrix() * v + obs.w() * x_plus;
}

std::pair<Mat3d, Tensor3Symd> transform_gradients(const Mat3d& grad_v, const Tensor3Symd& grad2_v,
                                                  const ObserverChange& obs) {
  return {rotate(obs.q(), grad_v) + obs.w(), rotate(obs.q(), grad2_v)};
}

std::pair<Mat3d, Tensor3Symd> transform_dynamics(const Mat3d& stress,
                                                 const Tensor3Symd& hyperstress,
                                                 const Rotationd& q) {
  return {rotate(q, stress), rotate(q, hyperstress)};
}

double power_invariance_residual(const Mat3d& stress, const Tensor3Symd& hyperstress,
                                 const Mat3d& grad_v, const Tensor3Symd& grad2_v,
                                 const ObserverChange& obs) {
  const auto [grad_v_plus, grad2_v_plus] = transform_gradients(grad_v, grad2_v, obs);
  const auto [stress_plus, hyperstress_plus] = transform_dynamics(stress, hyperstress, obs.q());
  const double original = inner(stress, grad_v) + inner(hyperstress, grad2_v);
  const double transformed =
      inner(stress_plus, grad_v_plus) + inner(hyperstress_plus, grad2_v_plus);
  return std::abs(original - transformed);
}

std::optional<Mat3d> find_symmetry_witness(const Mat3d& stress, double tol) {
  const Mat3d skew = skew_part(stress);
  const double norm = skew.norm();  // Frobenius
  if (norm <= tol) return std::nullopt;
  return Mat3d(skew / norm);
}

EdgeFrame rotate_frame(const Rotationd& q, const EdgeFrame& edge) {
  const Mat3d& m = q.matrix();
  return EdgeFrame(m * edge.n_prime(), m * edge.m_prime(), m * edge.n_second(),
                   m * edge.m_second(), m * edge.start(), m * edge.end());
}

double IndifferenceResiduals::max_residual() const {
  return std::max({traction, hypertraction, edge_force});
}

IndifferenceResiduals traction_indifference_check(const Mat3d& stress,
                                                  const Tensor3Symd& hyperstress, const Vec3d& n,
                                                  const EdgeFrame& edge, const Rotationd& q) {
  const Mat3d& m = q.matrix();
  const auto [stress_plus, hyperstress_plus] = transform_dynamics(stress, hyperstress, q);

  IndifferenceResiduals r;
  // Constant fields: the traction reduces to T n, the surface term vanishes.
  r.traction = (simple_traction(stress_plus, (m * n).eval()) - m * simple_traction(stress, n)).norm();
  r.hypertraction = (surface_hypertraction(hyperstress_plus, (m * n).eval()) -
                     m * surface_hypertraction(hyperstress, n))
                        .norm();
  r.edge_force =
      (edge_force(hyperstress_plus, rotate_frame(q, edge)) - m * edge_force(hyperstress, edge))
          .norm();
  return r;
}

}  // namespace hsk
