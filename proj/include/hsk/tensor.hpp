#pragma once

/// Fixed-dimension (3D) tensor algebra: second- and third-order tensors,
/// proper rotations with their group action, and the right-pair-symmetric
/// third-order tensors that carry hyperstresses.

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <cmath>
#include <stdexcept>

#include "hsk/config.hpp"

namespace hsk {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

using Vec3d = Vec3<double>;
using Mat3d = Mat3<double>;

/// Index of the unordered pair {j,k} in the packed layout
/// {00, 11, 22, 01, 02, 12} (zero-based axes).
constexpr int pair_index(int j, int k) noexcept { return j == k ? j : 2 + j + k; }

/// General third-order tensor, 27 components, no symmetry assumed.
/// Needed for gradients of second-order fields and as the expanded form of
/// Tensor3Sym.
template <typename Scalar>
class Tensor3 {
 public:
  Tensor3() : c_(Storage::Zero()) {}

  static Tensor3 Zero() { return Tensor3(); }

  static Tensor3 outer(const Vec3<Scalar>& a, const Vec3<Scalar>& b, const Vec3<Scalar>& c) {
    Tensor3 t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) t(i, j, k) = a[i] * b[j] * c[k];
    return t;
  }

  Scalar operator()(int i, int j, int k) const { return c_[9 * i + 3 * j + k]; }
  Scalar& operator()(int i, int j, int k) { return c_[9 * i + 3 * j + k]; }

  /// max |T_ijk - T_ikj| over all components.
  Scalar symmetry_violation() const {
    Scalar v(0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k)
          v = std::max(v, std::abs((*this)(i, j, k) - (*this)(i, k, j)));
    return v;
  }

  /// M_ij = T_ijk t_k (contraction on the last index).
  Mat3<Scalar> contract_last(const Vec3<Scalar>& t) const {
    Mat3<Scalar> m = Mat3<Scalar>::Zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) m(i, j) += (*this)(i, j, k) * t[k];
    return m;
  }

  Scalar max_abs() const { return c_.cwiseAbs().maxCoeff(); }

  Tensor3& operator+=(const Tensor3& o) {
    c_ += o.c_;
    return *this;
  }
  Tensor3& operator-=(const Tensor3& o) {
    c_ -= o.c_;
    return *this;
  }
  Tensor3& operator*=(Scalar s) {
    c_ *= s;
    return *this;
  }

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(Tensor3 a, Scalar s) { return a *= s; }
  friend Tensor3 operator*(Scalar s, Tensor3 a) { return a *= s; }
  friend Tensor3 operator-(Tensor3 a) { return a *= Scalar(-1); }

 private:
  using Storage = Eigen::Matrix<Scalar, 27, 1>;
  Storage c_;
};

using Tensor3d = Tensor3<double>;

/// Third-order tensor symmetric in its last index pair, H_ijk = H_ikj,
/// stored as 18 independent components (3 first indices x 6 unordered
/// pairs). The storage cannot represent a violation of the symmetry.
template <typename Scalar>
class Tensor3Sym {
 public:
  using Packed = Eigen::Matrix<Scalar, 3, 6>;

  Tensor3Sym() : c_(Packed::Zero()) {}

  static Tensor3Sym Zero() { return Tensor3Sym(); }

  /// The spherical form h (x) I: H_ijk = h_i d_jk.
  static Tensor3Sym spherical(const Vec3<Scalar>& h) {
    Tensor3Sym t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t.c_(i, pair_index(j, j)) = h[i];
    return t;
  }

  /// a_i sym(B)_jk. B is symmetrized, so any second-order tensor is a
  /// valid argument.
  static Tensor3Sym outer_sym(const Vec3<Scalar>& a, const Mat3<Scalar>& B) {
    Tensor3Sym t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = j; k < 3; ++k)
          t.c_(i, pair_index(j, k)) = a[i] * ((B(j, k) + B(k, j)) / Scalar(2));
    return t;
  }

  /// Packs a full tensor, averaging the last index pair. Throws if the
  /// symmetry violation exceeds tol.
  static Tensor3Sym from_full(const Tensor3<Scalar>& f, Scalar tol) {
    if (f.symmetry_violation() > tol)
      throw std::invalid_argument("Tensor3Sym: right-pair symmetry violation above tolerance");
    Tensor3Sym t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = j; k < 3; ++k)
          t.c_(i, pair_index(j, k)) = j == k ? f(i, j, k) : (f(i, j, k) + f(i, k, j)) / Scalar(2);
    return t;
  }

  Scalar operator()(int i, int j, int k) const { return c_(i, pair_index(j, k)); }
  void set(int i, int j, int k, Scalar v) { c_(i, pair_index(j, k)) = v; }
  void add(int i, int j, int k, Scalar v) { c_(i, pair_index(j, k)) += v; }

  Scalar packed(int i, int p) const { return c_(i, p); }
  const Packed& packed() const { return c_; }

  Tensor3<Scalar> full() const {
    Tensor3<Scalar> f;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) f(i, j, k) = (*this)(i, j, k);
    return f;
  }

  Scalar max_abs() const { return c_.cwiseAbs().maxCoeff(); }

  Tensor3Sym& operator+=(const Tensor3Sym& o) {
    c_ += o.c_;
    return *this;
  }
  Tensor3Sym& operator-=(const Tensor3Sym& o) {
    c_ -= o.c_;
    return *this;
  }
  Tensor3Sym& operator*=(Scalar s) {
    c_ *= s;
    return *this;
  }

  friend Tensor3Sym operator+(Tensor3Sym a, const Tensor3Sym& b) { return a += b; }
  friend Tensor3Sym operator-(Tensor3Sym a, const Tensor3Sym& b) { return a -= b; }
  friend Tensor3Sym operator*(Tensor3Sym a, Scalar s) { return a *= s; }
  friend Tensor3Sym operator*(Scalar s, Tensor3Sym a) { return a *= s; }
  friend Tensor3Sym operator-(Tensor3Sym a) { return a *= Scalar(-1); }

 private:
  Packed c_;
};

using Tensor3Symd = Tensor3Sym<double>;

/// Proper orthogonal tensor, validated at construction:
/// Q'Q = I and det Q = +1 within Tolerances::rotation_orthogonality.
template <typename Scalar>
class Rotation {
 public:
  explicit Rotation(const Mat3<Scalar>& m) : m_(m) {
    const Scalar tol = Scalar(kTol.rotation_orthogonality);
    const Scalar ortho = ((m.transpose() * m) - Mat3<Scalar>::Identity()).cwiseAbs().maxCoeff();
    if (ortho > tol || std::abs(m.determinant() - Scalar(1)) > tol)
      throw std::invalid_argument("Rotation: matrix is not proper orthogonal");
  }

  static Rotation identity() { return Rotation(Mat3<Scalar>::Identity()); }

  static Rotation axis_angle(const Vec3<Scalar>& axis, Scalar angle) {
    const Scalar n = axis.norm();
    if (n == Scalar(0)) throw std::invalid_argument("Rotation: zero axis");
    return Rotation(Eigen::AngleAxis<Scalar>(angle, (axis / n).eval()).toRotationMatrix());
  }

  const Mat3<Scalar>& matrix() const { return m_; }
  Rotation inverse() const { return Rotation(m_.transpose().eval()); }

  friend Rotation operator*(const Rotation& a, const Rotation& b) {
    return Rotation((a.m_ * b.m_).eval());
  }

 private:
  Mat3<Scalar> m_;
};

using Rotationd = Rotation<double>;

/// Ordered triple of orthonormal directions. Handedness is not required;
/// any orthonormal triple is a valid reconstruction basis.
template <typename Scalar>
class Basis {
 public:
  explicit Basis(const Mat3<Scalar>& columns) : b_(columns) {
    const Scalar dev =
        ((columns.transpose() * columns) - Mat3<Scalar>::Identity()).cwiseAbs().maxCoeff();
    if (dev > Scalar(kTol.rotation_orthogonality))
      throw std::invalid_argument("Basis: directions are not orthonormal");
  }

  Basis(const Vec3<Scalar>& b0, const Vec3<Scalar>& b1, const Vec3<Scalar>& b2)
      : Basis((Mat3<Scalar>() << b0, b1, b2).finished()) {}

  static Basis standard() { return Basis(Mat3<Scalar>::Identity()); }
  static Basis from_rotation(const Rotation<Scalar>& q) { return Basis(q.matrix()); }

  Vec3<Scalar> axis(int j) const { return b_.col(j); }
  const Mat3<Scalar>& columns() const { return b_; }

 private:
  Mat3<Scalar> b_;
};

using Basisd = Basis<double>;

// ---------------------------------------------------------------------------
// Contractions. The second argument of each kernel accepts any Eigen
// expression of the right shape.

/// (H a)_ij = H_ijk a_k.
template <typename Scalar, typename Derived>
Mat3<Scalar> apply_vector(const Tensor3Sym<Scalar>& h, const Eigen::MatrixBase<Derived>& a_expr) {
  const Vec3<Scalar> a = a_expr;
  Mat3<Scalar> m = Mat3<Scalar>::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m(i, j) += h(i, j, k) * a[k];
  return m;
}

/// (H[A])_i = H_ijk A_jk. Evaluated over packed pairs, so the result is
/// bit-identical under A -> A' (and hence under a <-> b in H[a (x) b]).
template <typename Scalar, typename Derived>
Vec3<Scalar> contract2(const Tensor3Sym<Scalar>& h, const Eigen::MatrixBase<Derived>& a_expr) {
  const Mat3<Scalar> a = a_expr;
  Vec3<Scalar> r = Vec3<Scalar>::Zero();
  for (int i = 0; i < 3; ++i) {
    Scalar s(0);
    for (int j = 0; j < 3; ++j) s += h(i, j, j) * a(j, j);
    for (int j = 0; j < 3; ++j)
      for (int k = j + 1; k < 3; ++k) s += h(i, j, k) * (a(j, k) + a(k, j));
    r[i] = s;
  }
  return r;
}

/// Duality pairing H . K = sum_ijk H_ijk K_ijk over all 27 expanded
/// components (off-diagonal pairs counted twice).
template <typename Scalar>
Scalar inner(const Tensor3Sym<Scalar>& h, const Tensor3Sym<Scalar>& k) {
  Scalar s(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int q = 0; q < 3; ++q) s += h(i, j, q) * k(i, j, q);
  return s;
}

/// A . B = A_ij B_ij.
template <typename DA, typename DB>
typename DA::Scalar inner(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return a.derived().cwiseProduct(b.derived()).sum();
}

template <typename Derived>
auto sym_part(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  return Mat3<Scalar>(((a.derived() + a.derived().transpose()) / Scalar(2)));
}

template <typename Derived>
auto skew_part(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  return Mat3<Scalar>(((a.derived() - a.derived().transpose()) / Scalar(2)));
}

// ---------------------------------------------------------------------------
// Rotation-group action

/// Q v for vectors, Q * A = Q A Q' for second-order tensors.
template <typename Scalar, typename Derived>
auto rotate(const Rotation<Scalar>& q, const Eigen::MatrixBase<Derived>& x) {
  if constexpr (Derived::ColsAtCompileTime == 1)
    return Vec3<Scalar>(q.matrix() * x.derived());
  else
    return Mat3<Scalar>(q.matrix() * x.derived() * q.matrix().transpose());
}

/// [Q * T]_ijk = Q_ip Q_jq Q_kr T_pqr.
template <typename Scalar>
Tensor3<Scalar> rotate(const Rotation<Scalar>& q, const Tensor3<Scalar>& t) {
  const Mat3<Scalar>& m = q.matrix();
  Tensor3<Scalar> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Scalar s(0);
        for (int p = 0; p < 3; ++p)
          for (int qq = 0; qq < 3; ++qq)
            for (int r = 0; r < 3; ++r) s += m(i, p) * m(j, qq) * m(k, r) * t(p, qq, r);
        out(i, j, k) = s;
      }
  return out;
}

/// Rotation of a right-pair-symmetric tensor; the action preserves the
/// symmetry, so the result packs back without loss.
template <typename Scalar>
Tensor3Sym<Scalar> rotate(const Rotation<Scalar>& q, const Tensor3Sym<Scalar>& h) {
  return Tensor3Sym<Scalar>::from_full(rotate(q, h.full()), Scalar(kTol.packing));
}

// ---------------------------------------------------------------------------
// Coefficient traits shared by polynomial fields and quadrature kernels.

namespace detail {

template <typename Coef>
struct CoefTraits;

template <>
struct CoefTraits<double> {
  using Scalar = double;
  static constexpr int rank = 0;
  static double zero() { return 0.0; }
  static double max_abs(double c) { return std::abs(c); }
};

template <>
struct CoefTraits<float> {
  using Scalar = float;
  static constexpr int rank = 0;
  static float zero() { return 0.0f; }
  static float max_abs(float c) { return std::abs(c); }
};

template <typename S, int R, int C, int O, int MR, int MC>
struct CoefTraits<Eigen::Matrix<S, R, C, O, MR, MC>> {
  using Scalar = S;
  using Coef = Eigen::Matrix<S, R, C, O, MR, MC>;
  static constexpr int rank = (C == 1 ? 1 : 2);
  static Coef zero() { return Coef::Zero(); }
  static S max_abs(const Coef& c) { return c.cwiseAbs().maxCoeff(); }
};

template <typename S>
struct CoefTraits<Tensor3<S>> {
  using Scalar = S;
  static constexpr int rank = 3;
  static Tensor3<S> zero() { return Tensor3<S>::Zero(); }
  static S max_abs(const Tensor3<S>& c) { return c.max_abs(); }
};

template <typename S>
struct CoefTraits<Tensor3Sym<S>> {
  using Scalar = S;
  static constexpr int rank = 3;
  static Tensor3Sym<S> zero() { return Tensor3Sym<S>::Zero(); }
  static S max_abs(const Tensor3Sym<S>& c) { return c.max_abs(); }
};

}  // namespace detail

}  // namespace hsk
