#pragma once

/// Seeded, fully deterministic generators for tensors, rotations, frames
/// and polynomial fields. Doubles are drawn from the raw 64-bit stream, so
/// identical seeds give identical values on any platform.

#include <cstdint>

#include "hsk/fields.hpp"
#include "hsk/geometry.hpp"
#include "hsk/tensor.hpp"

#include <random>

namespace hsk {

std::uint64_t splitmix64(std::uint64_t x);

/// Stable per-job seed derivation, independent of execution order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  double uniform(double lo = -1.0, double hi = 1.0) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;  // [0, 1)
    return lo + (hi - lo) * u;
  }

  /// Uniform value quantized to multiples of 2^-10. Coefficients drawn this
  /// way keep polynomial differentiation identities exact, not just exact
  /// to roundoff.
  double uniform_dyadic(double lo = -1.0, double hi = 1.0);

  bool coin() { return (gen_() & 1u) != 0; }

  Vec3d vec3(double scale = 1.0);
  Vec3d unit_vec3();
  Mat3d mat3();
  Mat3d symmetric_mat3();
  Mat3d skew_mat3();
  Rotationd rotation();
  Basisd basis() { return Basisd::from_rotation(rotation()); }
  Tensor3Symd tensor3sym();

  /// Random valid edge frame: random tangent, the two (n, m) pairs at
  /// independent angles and outward signs in the orthogonal plane.
  EdgeFrame edge_frame();

  ScalarField scalar_field(int degree, bool dyadic = false);
  VectorField vector_field(int degree, bool dyadic = false);
  Tensor2Field tensor2_field(int degree, bool symmetric = false, bool dyadic = false);
  HyperstressField hyperstress_field(int degree, bool dyadic = false);
  VelocityField velocity_field(int degree, bool dyadic = false) {
    return vector_field(degree, dyadic);
  }

  /// curl of a dyadic-coefficient potential: div v vanishes exactly at the
  /// coefficient level.
  VelocityField divergence_free_velocity(int degree);

 private:
  double draw(bool dyadic) { return dyadic ? uniform_dyadic() : uniform(); }
  std::mt19937_64 gen_;
};

}  // namespace hsk
