#pragma once

/// Observer changes and the rotational-invariance structure of the specific
/// internal power, as pointwise checks and a closed-form counterexample
/// search for non-symmetric stress.

#include <optional>

#include "hsk/geometry.hpp"
#include "hsk/tensor.hpp"

namespace hsk {

/// Instantaneous observer-change parameters: translation velocity, rotation
/// and relative spin (skew). All three may take arbitrary values.
class ObserverChange {
 public:
  ObserverChange(const Vec3d& q_dot, const Rotationd& q, const Mat3d& w);

  static ObserverChange identity();

  const Vec3d& q_dot() const { return q_dot_; }
  const Rotationd& q() const { return q_; }
  const Mat3d& w() const { return w_; }

 private:
  Vec3d q_dot_;
  Rotationd q_;
  Mat3d w_;
};

/// v+ = q_dot + Q v + W x+.
Vec3d transform_velocity(const Vec3d& v, const Vec3d& x_plus, const ObserverChange& obs);

/// (grad v)+ = Q * grad v + W and (grad grad v)+ = Q * grad grad v.
std::pair<Mat3d, Tensor3Symd> transform_gradients(const Mat3d& grad_v, const Tensor3Symd& grad2_v,
                                                  const ObserverChange& obs);

/// (T+, H+) = (Q * T, Q * H).
std::pair<Mat3d, Tensor3Symd> transform_dynamics(const Mat3d& stress, const Tensor3Symd& hyperstress,
                                                 const Rotationd& q);

/// | T.grad v + H.grad grad v
///   - (Q*T).(Q*grad v + W) - (Q*H).(Q*grad grad v) |.
/// The gradient and hyperstress terms cancel identically, leaving
/// |(Q*T).W| = |skew(Q*T).W|; with Q = I this is |skew(T).W|.
double power_invariance_residual(const Mat3d& stress, const Tensor3Symd& hyperstress,
                                 const Mat3d& grad_v, const Tensor3Symd& grad2_v,
                                 const ObserverChange& obs);

/// For non-symmetric stress returns the spin W = skew(T)/|skew(T)|_F that
/// exposes the invariance defect with residual |skew(T)|_F; returns nothing
/// when the skew part is below tol.
std::optional<Mat3d> find_symmetry_witness(const Mat3d& stress, double tol = 1e-13);

/// Frame with all four vectors and the segment rotated by Q.
EdgeFrame rotate_frame(const Rotationd& q, const EdgeFrame& edge);

/// Residuals of the indifference rules for the maps induced by a constant
/// (T, H) pair: t+ = Q t, h+ = Q h, f+ = Q f.
struct IndifferenceResiduals {
  double traction = 0.0;
  double hypertraction = 0.0;
  double edge_force = 0.0;
  double max_residual() const;
};

IndifferenceResiduals traction_indifference_check(const Mat3d& stress,
                                                  const Tensor3Symd& hyperstress, const Vec3d& n,
                                                  const EdgeFrame& edge, const Rotationd& q);

}  // namespace hsk
