#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hsk/invariance.hpp"
#include "hsk/random.hpp"
#include "hsk/traction.hpp"

using namespace hsk;

TEST_CASE("observer change validation") {
  CHECK_THROWS_AS(ObserverChange(Vec3d::Zero(), Rotationd::identity(),
                                 Mat3d(Mat3d::Identity())),
                  std::invalid_argument);
  CHECK_NOTHROW(ObserverChange::identity());
}

TEST_CASE("transform_velocity") {
  const Vec3d v(1, 0, 0);
  SUBCASE("identity observer") {
    CHECK((transform_velocity(v, Vec3d(5, 5, 5), ObserverChange::identity()) - v).norm() == 0.0);
  }
  SUBCASE("pure translation") {
    const ObserverChange obs(Vec3d::UnitX(), Rotationd::identity(), Mat3d::Zero());
    CHECK((transform_velocity(Vec3d(0, 0, 0), Vec3d(2, 3, 4), obs) - Vec3d::UnitX()).norm() ==
          0.0);
  }
  SUBCASE("quarter turn") {
    const ObserverChange obs(Vec3d::Zero(),
                             Rotationd::axis_angle(Vec3d::UnitZ(), std::numbers::pi / 2),
                             Mat3d::Zero());
    CHECK((transform_velocity(v, Vec3d(0, 0, 0), obs) - Vec3d::UnitY()).norm() <= 1e-15);
  }
  SUBCASE("spin term uses the observed position") {
    Rng rng(307);
    const Mat3d w = rng.skew_mat3();
    const ObserverChange obs(Vec3d::Zero(), Rotationd::identity(), w);
    const Vec3d x(1, 2, 3);
    CHECK((transform_velocity(Vec3d(0, 0, 0), x, obs) - w * x).norm() == 0.0);
  }
}

TEST_CASE("transform_gradients") {
  Rng rng(311);
  SUBCASE("identity rotation adds the spin") {
    const Mat3d g = rng.mat3();
    const Tensor3Symd g2 = rng.tensor3sym();
    const Mat3d w = rng.skew_mat3();
    const auto [gp, g2p] = transform_gradients(g, g2, ObserverChange(Vec3d::Zero(),
                                                                     Rotationd::identity(), w));
    CHECK((gp - (g + w)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((g2p - g2).max_abs() == 0.0);
  }
  SUBCASE("isotropic gradient is fixed by every rotation") {
    const auto [gp, g2p] = transform_gradients(
        Mat3d::Identity(), Tensor3Symd::Zero(),
        ObserverChange(Vec3d::Zero(), rng.rotation(), Mat3d::Zero()));
    CHECK((gp - Mat3d::Identity()).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(g2p.max_abs() == 0.0);
  }
  SUBCASE("second gradient rotates as a third-order tensor") {
    const Tensor3Symd g2 =
        Tensor3Symd::outer_sym(Vec3d::UnitX(), Mat3d(Vec3d::UnitX() * Vec3d::UnitX().transpose()));
    const ObserverChange obs(Vec3d::Zero(),
                             Rotationd::axis_angle(Vec3d::UnitZ(), std::numbers::pi / 2),
                             Mat3d::Zero());
    const auto [gp, g2p] = transform_gradients(Mat3d::Zero(), g2, obs);
    CHECK(gp.cwiseAbs().maxCoeff() <= 1e-15);
    const Tensor3Symd expected =
        Tensor3Symd::outer_sym(Vec3d::UnitY(), Mat3d(Vec3d::UnitY() * Vec3d::UnitY().transpose()));
    CHECK((g2p - expected).max_abs() <= 1e-15);
  }
}

TEST_CASE("transform_dynamics applies the group action to both tensors") {
  Rng rng(312);
  for (int c = 0; c < 20; ++c) {
    const Mat3d t = rng.mat3();
    const Tensor3Symd h = rng.tensor3sym();
    const Rotationd q = rng.rotation();
    const auto [tp, hp] = transform_dynamics(t, h, q);
    CHECK((tp - rotate(q, t)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((hp - rotate(q, h)).max_abs() == 0.0);
  }
}

TEST_CASE("power invariance residual") {
  SUBCASE("symmetric stress is invariant under every observer change") {
    Rng rng(313);
    for (int c = 0; c < 100; ++c) {
      const ObserverChange obs(rng.vec3(), rng.rotation(), rng.skew_mat3());
      const double r = power_invariance_residual(rng.symmetric_mat3(), rng.tensor3sym(),
                                                 rng.mat3(), rng.tensor3sym(), obs);
      CHECK(r <= 1e-13);
    }
  }
  SUBCASE("unit shear against its own spin") {
    const Mat3d t = Vec3d::UnitX() * Vec3d::UnitY().transpose();
    const Mat3d w = Vec3d::UnitX() * Vec3d::UnitY().transpose() -
                    Vec3d::UnitY() * Vec3d::UnitX().transpose();
    const ObserverChange obs(Vec3d::Zero(), Rotationd::identity(), w);
    CHECK(power_invariance_residual(t, Tensor3Symd::Zero(), Mat3d::Zero(), Tensor3Symd::Zero(),
                                    obs) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("no spin, no defect") {
    Rng rng(317);
    for (int c = 0; c < 50; ++c) {
      const ObserverChange obs(rng.vec3(), rng.rotation(), Mat3d::Zero());
      CHECK(power_invariance_residual(rng.mat3(), rng.tensor3sym(), rng.mat3(), rng.tensor3sym(),
                                      obs) <= 1e-13);
    }
  }
  SUBCASE("identity rotation: residual is |skew(T).W| exactly") {
    Rng rng(331);
    for (int c = 0; c < 500; ++c) {
      const Mat3d t = rng.mat3();
      const Mat3d w = rng.skew_mat3();
      const ObserverChange obs(rng.vec3(), Rotationd::identity(), w);
      const double r =
          power_invariance_residual(t, rng.tensor3sym(), rng.mat3(), rng.tensor3sym(), obs);
      CHECK(std::abs(r - std::abs(inner(skew_part(t), w))) <= 1e-13);
    }
  }
  SUBCASE("general rotation: residual is |skew(Q*T).W|") {
    // The hyperstress and gradient terms cancel through the transposed
    // action; what remains pairs the transformed stress with the spin.
    Rng rng(337);
    for (int c = 0; c < 200; ++c) {
      const Mat3d t = rng.mat3();
      const Rotationd q = rng.rotation();
      const Mat3d w = rng.skew_mat3();
      const ObserverChange obs(rng.vec3(), q, w);
      const double r =
          power_invariance_residual(t, rng.tensor3sym(), rng.mat3(), rng.tensor3sym(), obs);
      CHECK(std::abs(r - std::abs(inner(skew_part(rotate(q, t)), w))) <= 1e-13);
    }
  }
}

TEST_CASE("symmetry witness") {
  SUBCASE("unit shear") {
    const Mat3d t = Vec3d::UnitX() * Vec3d::UnitY().transpose();
    const auto w = find_symmetry_witness(t);
    REQUIRE(w.has_value());
    const ObserverChange obs(Vec3d::Zero(), Rotationd::identity(), *w);
    const double r = power_invariance_residual(t, Tensor3Symd::Zero(), Mat3d::Zero(),
                                               Tensor3Symd::Zero(), obs);
    CHECK(r >= 0.70);
    CHECK(r == doctest::Approx(skew_part(t).norm()).epsilon(1e-13));  // 1/sqrt(2)
  }
  SUBCASE("symmetric inputs have no witness") {
    CHECK(!find_symmetry_witness(Mat3d(Vec3d(1, 2, 3).asDiagonal())));
    CHECK(!find_symmetry_witness(Mat3d::Identity()));
  }
  SUBCASE("witness residual equals the skew norm for random stress") {
    Rng rng(347);
    for (int c = 0; c < 100; ++c) {
      const Mat3d t = rng.mat3();
      const auto w = find_symmetry_witness(t);
      REQUIRE(w.has_value());  // random stress is never exactly symmetric
      const ObserverChange obs(Vec3d::Zero(), Rotationd::identity(), *w);
      const double r = power_invariance_residual(t, Tensor3Symd::Zero(), Mat3d::Zero(),
                                                 Tensor3Symd::Zero(), obs);
      CHECK(std::abs(r - skew_part(t).norm()) <= 1e-13);
    }
  }
}

TEST_CASE("indifference of the induced maps") {
  Rng rng(349);
  SUBCASE("identity rotation gives zero residuals") {
    const IndifferenceResiduals r = traction_indifference_check(
        rng.mat3(), rng.tensor3sym(), rng.unit_vec3(), rng.edge_frame(), Rotationd::identity());
    CHECK(r.max_residual() == 0.0);
  }
  SUBCASE("spherical hyperstress transforms its vector") {
    for (int c = 0; c < 20; ++c) {
      const Vec3d h = rng.vec3();
      const Rotationd q = rng.rotation();
      const Vec3d n = rng.unit_vec3();
      const Vec3d lhs = surface_hypertraction(rotate(q, Tensor3Symd::spherical(h)),
                                              Vec3d(q.matrix() * n));
      CHECK((lhs - q.matrix() * h).norm() <= 1e-13);
    }
  }
  SUBCASE("random constant states under many rotations") {
    for (int c = 0; c < 50; ++c) {
      const IndifferenceResiduals r = traction_indifference_check(
          rng.mat3(), rng.tensor3sym(), rng.unit_vec3(), rng.edge_frame(), rng.rotation());
      CHECK(r.max_residual() <= 1e-12);
    }
  }
  SUBCASE("edge force indifference stated directly") {
    for (int c = 0; c < 100; ++c) {
      const Tensor3Symd h = rng.tensor3sym();
      const EdgeFrame e = rng.edge_frame();
      const Rotationd q = rng.rotation();
      const Vec3d lhs = edge_force(rotate(q, h), rotate_frame(q, e));
      CHECK((lhs - q.matrix() * edge_force(h, e)).norm() <= 1e-12);
    }
  }
}
