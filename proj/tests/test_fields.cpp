#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hsk/fields.hpp"
#include "hsk/random.hpp"

using namespace hsk;

namespace {

VelocityField identity_flow() {
  VelocityField v;
  for (int d = 0; d < 3; ++d) {
    Exponent e;
    e[d] = 1;
    Vec3d c = Vec3d::Zero();
    c[d] = 1.0;
    v.add_term(e, c);
  }
  return v;
}

/// v = (0, 0, x1^2)
VelocityField parabola_flow() {
  VelocityField v;
  v.add_term(Exponent{{2, 0, 0}}, Vec3d(0, 0, 1));
  return v;
}

/// H(x) = x1 * (e1 (x) I)
HyperstressField linear_spherical_hyperstress() {
  HyperstressField h;
  h.add_term(Exponent{{1, 0, 0}}, Tensor3Symd::spherical(Vec3d::UnitX()));
  return h;
}

/// Central-difference surface divergence, independent of the symbolic
/// gradient path: only pointwise field evaluations enter.
Vec3d fd_surface_div(const HyperstressField& h, const Vec3d& x, const Vec3d& n, double step) {
  const auto bn = [&](const Vec3d& p) { return apply_vector(h(p), n); };
  const auto [t1, t2] = tangent_basis(n);
  Vec3d r = Vec3d::Zero();
  for (const Vec3d& t : {t1, t2}) {
    const Mat3d db = (bn(x + step * t) - bn(x - step * t)) / (2.0 * step);
    r += db * t;
  }
  return r;
}

}  // namespace

TEST_CASE("term bookkeeping") {
  ScalarField f;
  f.add_term(Exponent{{1, 0, 0}}, 2.0);
  f.add_term(Exponent{{1, 0, 0}}, -2.0);  // merges to an exact zero and drops
  CHECK(f.is_zero());
  CHECK(f.degree() == 0);
  CHECK_THROWS_AS(f.add_term(Exponent{{5, 2, 2}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(f.add_term(Exponent{{-1, 0, 0}}, 1.0), std::invalid_argument);
}

TEST_CASE("grad") {
  SUBCASE("identity flow has gradient I everywhere") {
    const Tensor2Field g = grad(identity_flow());
    Rng rng(1);
    for (int c = 0; c < 10; ++c)
      CHECK((g(rng.vec3()) - Mat3d::Identity()).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("second gradient of (0,0,x1^2) has the single component (3,1,1) = 2") {
    const PolyField<Tensor3Symd> g2 = grad2_velocity(parabola_flow());
    const Tensor3Symd at = g2(Vec3d(0.7, -0.3, 0.2));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          CHECK(at(i, j, k) == ((i == 2 && j == 0 && k == 0) ? 2.0 : 0.0));
  }
  SUBCASE("constant fields have zero gradient") {
    CHECK(grad(VectorField::constant(Vec3d(1, 2, 3))).is_zero());
    CHECK(grad(ScalarField::constant(4.0)).is_zero());
  }
}

TEST_CASE("grad2_velocity packing") {
  SUBCASE("v = (0,0,x1 x2)") {
    VelocityField v;
    v.add_term(Exponent{{1, 1, 0}}, Vec3d(0, 0, 1));
    const Tensor3Symd g2 = grad2_velocity(v)(Vec3d::Zero());
    CHECK(g2(2, 0, 1) == 1.0);
    CHECK(g2(2, 1, 0) == 1.0);
    CHECK(inner(g2, g2) == 2.0);  // no other entries
  }
  SUBCASE("linear flow") { CHECK(grad2_velocity(identity_flow()).is_zero()); }
  SUBCASE("v = (x2^3,0,0) has (1,2,2) component 6 x2") {
    VelocityField v;
    v.add_term(Exponent{{0, 3, 0}}, Vec3d(1, 0, 0));
    const auto g2 = grad2_velocity(v);
    for (double x2 : {0.0, 0.5, -1.25}) CHECK(g2(Vec3d(9, x2, -4))(0, 1, 1) == 6.0 * x2);
  }
  SUBCASE("two-pass route agrees and has exact mixed partials for dyadic fields") {
    Rng rng(23);
    for (int c = 0; c < 20; ++c) {
      const VelocityField v = rng.velocity_field(5, /*dyadic=*/true);
      const PolyField<Tensor3d> two_pass = grad(grad(v));
      for (const auto& t : two_pass.terms()) CHECK(t.coef.symmetry_violation() == 0.0);
      PolyField<Tensor3Symd> packed;
      for (const auto& t : two_pass.terms())
        packed.add_term(t.exp, Tensor3Symd::from_full(t.coef, 0.0));  // lossless
      const auto direct = grad2_velocity(v);
      const Vec3d x = rng.vec3();
      CHECK((packed(x) - direct(x)).max_abs() == 0.0);
    }
  }
  SUBCASE("general coefficients stay within roundoff") {
    Rng rng(29);
    for (int c = 0; c < 20; ++c) {
      const VelocityField v = rng.velocity_field(5);
      for (const auto& t : grad(grad(v)).terms())
        CHECK(t.coef.symmetry_violation() <= 1e-13);
    }
  }
}

TEST_CASE("div") {
  SUBCASE("x1 * (e1 (x) I) has divergence e1 (x) e1") {
    const Tensor2Field d = div(linear_spherical_hyperstress());
    const Mat3d expected = Vec3d::UnitX() * Vec3d::UnitX().transpose();
    CHECK((d(Vec3d(0.3, 0.4, 0.5)) - expected).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("constant hyperstress") {
    CHECK(div(HyperstressField::constant(Tensor3Symd::spherical(Vec3d(1, 2, 3)))).is_zero());
  }
  SUBCASE("T = x2 e1 (x) e2 has divergence e1") {
    Tensor2Field t;
    t.add_term(Exponent{{0, 1, 0}}, Mat3d(Vec3d::UnitX() * Vec3d::UnitY().transpose()));
    CHECK((div(t)(Vec3d(4, 5, 6)) - Vec3d::UnitX()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("curl, laplacian and the double-curl identity") {
  SUBCASE("v = (0,0,x1^2)") {
    const VelocityField v = parabola_flow();
    CHECK((laplacian(v)(Vec3d(1, 2, 3)) - Vec3d(0, 0, 2)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(div(v).is_zero());
    CHECK((curl(curl(v))(Vec3d(1, 2, 3)) - Vec3d(0, 0, -2)).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("constant and identity flows") {
    const VelocityField c = VectorField::constant(Vec3d(3, -1, 2));
    CHECK(curl(c).is_zero());
    CHECK(laplacian(c).is_zero());
    CHECK(div(c).is_zero());
    const VelocityField idv = identity_flow();
    CHECK(div(idv)(Vec3d(7, 8, 9)) == 3.0);
    CHECK(curl(idv).is_zero());
    CHECK(laplacian(idv).is_zero());
  }
  SUBCASE("curl curl v = grad div v - lap v, exactly for dyadic coefficients") {
    Rng rng(31);
    for (int c = 0; c < 25; ++c) {
      const VelocityField v = rng.velocity_field(5, /*dyadic=*/true);
      const VectorField lhs = curl(curl(v));
      const VectorField rhs = grad(div(v)) - laplacian(v);
      CHECK((lhs - rhs).is_zero());
    }
  }
  SUBCASE("same identity within roundoff for general coefficients") {
    Rng rng(37);
    for (int c = 0; c < 25; ++c) {
      const VelocityField v = rng.velocity_field(5);
      CHECK((curl(curl(v)) - (grad(div(v)) - laplacian(v))).max_abs_coef() <= 1e-13);
    }
  }
  SUBCASE("div of grad equals laplacian") {
    Rng rng(41);
    for (int c = 0; c < 25; ++c) {
      const VelocityField v = rng.velocity_field(5, /*dyadic=*/true);
      CHECK((div(grad(v)) - laplacian(v)).is_zero());
    }
  }
}

TEST_CASE("surface divergence on flat faces") {
  SUBCASE("constant hyperstress") {
    const HyperstressField h = HyperstressField::constant(Tensor3Symd::spherical(Vec3d(1, 2, 3)));
    CHECK(surface_div_flat(h, Vec3d(0.2, 0.3, 0.4), Vec3d::UnitY()).norm() == 0.0);
  }
  SUBCASE("x1 (e1 (x) I) on the plane with normal e1") {
    const HyperstressField h = linear_spherical_hyperstress();
    CHECK(surface_div_flat(h, Vec3d(1, 0.5, 0.5), Vec3d::UnitX()).norm() == 0.0);
  }
  SUBCASE("x2-modulated single component vanishes on two coordinate planes") {
    Tensor3Symd k;
    k.set(0, 1, 1, 1.0);  // e1 (x) e2 (x) e2
    HyperstressField h;
    h.add_term(Exponent{{0, 1, 0}}, k);
    CHECK(surface_div_flat(h, Vec3d(0.1, 0.2, 0.3), Vec3d::UnitZ()).norm() == 0.0);
    CHECK(surface_div_flat(h, Vec3d(0.1, 0.2, 0.3), Vec3d::UnitY()).norm() == 0.0);
  }
  SUBCASE("non-unit normal is rejected") {
    const HyperstressField h = linear_spherical_hyperstress();
    CHECK_THROWS_AS(surface_div_flat(h, Vec3d::Zero(), Vec3d(1, 1, 0)), std::invalid_argument);
  }
  SUBCASE("agrees with the central-difference oracle") {
    Rng rng(43);
    for (int c = 0; c < 30; ++c) {
      const HyperstressField h = rng.hyperstress_field(3);
      const Vec3d x = rng.vec3();
      const Vec3d n = rng.unit_vec3();
      const Vec3d exact = surface_div_flat(h, x, n);
      const Vec3d fd = fd_surface_div(h, x, n, 1e-5);
      CHECK((exact - fd).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
  SUBCASE("tangent-basis sum equals the projector contraction") {
    Rng rng(47);
    for (int c = 0; c < 30; ++c) {
      const HyperstressField h = rng.hyperstress_field(3);
      const Vec3d x = rng.vec3();
      const Vec3d n = rng.unit_vec3();
      const Tensor3d g = grad(apply_vector(h, n))(x);
      const Mat3d projector = Mat3d::Identity() - n * n.transpose();
      Vec3d via_projector = Vec3d::Zero();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) via_projector[i] += g(i, j, k) * projector(j, k);
      CHECK((surface_div_flat(h, x, n) - via_projector).cwiseAbs().maxCoeff() <= 1e-13);
    }
  }
}

TEST_CASE("rank-erased wrappers enforce the rank limits") {
  const FieldVariant scalar = ScalarField::constant(1.0);
  CHECK(rank(scalar) == 0);
  CHECK_THROWS_AS(div(scalar), std::invalid_argument);

  FieldVariant f = scalar;
  f = grad(f);  // rank 1
  f = grad(f);  // rank 2
  f = grad(f);  // rank 3
  CHECK(rank(f) == 3);
  CHECK_THROWS_AS(grad(f), std::invalid_argument);
  CHECK(rank(div(f)) == 2);
}

TEST_CASE("divergence-free construction and detection") {
  Rng rng(53);
  for (int c = 0; c < 10; ++c) {
    const VelocityField v = rng.divergence_free_velocity(4);
    CHECK(is_divergence_free(v));
    CHECK(!is_divergence_free(identity_flow()));
  }
}
