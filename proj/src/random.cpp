#include "hsk/random.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace hsk {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream + 0x51AF8BD9C3E1Dull));
}

double Rng::uniform_dyadic(double lo, double hi) {
  return std::ldexp(std::round(std::ldexp(uniform(lo, hi), 10)), -10);
}

Vec3d Rng::vec3(double scale) {
  return Vec3d(uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale));
}

Vec3d Rng::unit_vec3() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Vec3d(r * std::cos(phi), r * std::sin(phi), z);
}

Mat3d Rng::mat3() {
  Mat3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = uniform();
  return m;
}

Mat3d Rng::symmetric_mat3() { return sym_part(mat3()); }

Mat3d Rng::skew_mat3() { return skew_part(mat3()); }

Rotationd Rng::rotation() {
  return Rotationd::axis_angle(unit_vec3(), uniform(0.0, 2.0 * std::numbers::pi));
}

Tensor3Symd Rng::tensor3sym() {
  Tensor3Symd h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = j; k < 3; ++k) h.set(i, j, k, uniform());
  return h;
}

EdgeFrame Rng::edge_frame() {
  const Vec3d t = unit_vec3();
  const auto [u, w] = tangent_basis(t);
  const auto pair = [&](double phi, double sign) {
    const Vec3d n = std::cos(phi) * u + std::sin(phi) * w;
    const Vec3d m = sign * t.cross(n);
    return std::pair<Vec3d, Vec3d>(n, m);
  };
  const auto [n1, m1] = pair(uniform(0.0, 2.0 * std::numbers::pi), coin() ? 1.0 : -1.0);
  const auto [n2, m2] = pair(uniform(0.0, 2.0 * std::numbers::pi), coin() ? 1.0 : -1.0);
  const Vec3d p0 = vec3();
  return EdgeFrame(n1, m1, n2, m2, p0, p0 + uniform(0.5, 2.0) * t);
}

namespace {

template <typename Coef, typename Draw>
PolyField<Coef> random_field(int degree, Draw&& draw_coef) {
  PolyField<Coef> f;
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b)
      for (int c = 0; a + b + c <= degree; ++c) f.add_term(Exponent{{a, b, c}}, draw_coef());
  return f;
}

}  // namespace

ScalarField Rng::scalar_field(int degree, bool dyadic) {
  return random_field<double>(degree, [&] { return draw(dyadic); });
}

VectorField Rng::vector_field(int degree, bool dyadic) {
  return random_field<Vec3d>(degree, [&] {
    return Vec3d(draw(dyadic), draw(dyadic), draw(dyadic));
  });
}

Tensor2Field Rng::tensor2_field(int degree, bool symmetric, bool dyadic) {
  return random_field<Mat3d>(degree, [&] {
    Mat3d m;
    if (symmetric) {
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) m(j, i) = m(i, j) = draw(dyadic);
    } else {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = draw(dyadic);
    }
    return m;
  });
}

HyperstressField Rng::hyperstress_field(int degree, bool dyadic) {
  return random_field<Tensor3Symd>(degree, [&] {
    Tensor3Symd h;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = j; k < 3; ++k) h.set(i, j, k, draw(dyadic));
    return h;
  });
}

VelocityField Rng::divergence_free_velocity(int degree) {
  const VectorField potential = vector_field(degree + 1, /*dyadic=*/true);
  VelocityField v = curl(potential);
  assert(is_divergence_free(v));
  return v;
}

}  // namespace hsk
