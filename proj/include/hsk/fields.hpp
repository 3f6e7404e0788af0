#pragma once

/// Polynomial tensor fields over 3D space with exact coefficient-level
/// differentiation. These supply every differential operator used by the
/// traction and balance machinery; numerical differentiation appears only
/// as a test oracle.

#include <algorithm>
#include <array>
#include <concepts>
#include <stdexcept>
#include <variant>
#include <vector>

#include "hsk/tensor.hpp"

namespace hsk {

/// Total degree cap. Keeps term counts bounded; every verification suite
/// stays well inside it.
inline constexpr int kMaxFieldDegree = 8;

struct Exponent {
  std::array<int, 3> e{0, 0, 0};

  int operator[](int d) const { return e[static_cast<std::size_t>(d)]; }
  int& operator[](int d) { return e[static_cast<std::size_t>(d)]; }
  int degree() const { return e[0] + e[1] + e[2]; }

  Exponent lowered(int axis, int by = 1) const {
    Exponent r = *this;
    r[axis] -= by;
    return r;
  }

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Multivariate polynomial with tensor-valued coefficients. Terms are kept
/// sorted by exponent with duplicates merged and exact zeros dropped, so
/// degree() and is_zero() are symbolic statements about the coefficients.
template <typename Coef>
class PolyField {
 public:
  using Traits = detail::CoefTraits<Coef>;
  using Scalar = typename Traits::Scalar;

  struct Term {
    Exponent exp;
    Coef coef;
  };

  PolyField() = default;

  static PolyField constant(const Coef& c) {
    PolyField f;
    f.add_term(Exponent{}, c);
    return f;
  }

  void add_term(const Exponent& e, const Coef& c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0)
      throw std::invalid_argument("PolyField: negative exponent");
    if (e.degree() > kMaxFieldDegree)
      throw std::invalid_argument("PolyField: total degree above supported maximum");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) { return t.exp < x; });
    if (it != terms_.end() && it->exp == e) {
      it->coef += c;
      if (Traits::max_abs(it->coef) == Scalar(0)) terms_.erase(it);
    } else if (Traits::max_abs(c) != Scalar(0)) {
      terms_.insert(it, Term{e, c});
    }
  }

  Coef operator()(const Vec3<Scalar>& x) const {
    Coef acc = Traits::zero();
    for (const Term& t : terms_) acc += t.coef * monomial(x, t.exp);
    return acc;
  }

  /// Degree of the zero field is reported as 0.
  int degree() const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.exp.degree());
    return d;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  Scalar max_abs_coef() const {
    Scalar m(0);
    for (const Term& t : terms_) m = std::max(m, Traits::max_abs(t.coef));
    return m;
  }

  PolyField& operator+=(const PolyField& o) {
    for (const Term& t : o.terms_) add_term(t.exp, t.coef);
    return *this;
  }
  PolyField& operator-=(const PolyField& o) {
    for (const Term& t : o.terms_) add_term(t.exp, -t.coef);
    return *this;
  }
  PolyField& operator*=(Scalar s) {
    std::vector<Term> scaled;
    scaled.swap(terms_);
    for (Term& t : scaled) add_term(t.exp, t.coef * s);
    return *this;
  }

  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  friend PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }
  friend PolyField operator*(PolyField a, Scalar s) { return a *= s; }
  friend PolyField operator*(Scalar s, PolyField a) { return a *= s; }

  static Scalar monomial(const Vec3<Scalar>& x, const Exponent& e) {
    Scalar m(1);
    for (int d = 0; d < 3; ++d)
      for (int q = 0; q < e[d]; ++q) m *= x[d];
    return m;
  }

 private:
  std::vector<Term> terms_;
};

namespace detail {

template <typename T>
struct is_poly_field : std::false_type {};
template <typename C>
struct is_poly_field<PolyField<C>> : std::true_type {};

}  // namespace detail

using ScalarField = PolyField<double>;
using VectorField = PolyField<Vec3d>;
using VelocityField = VectorField;
using Tensor2Field = PolyField<Mat3d>;
using Tensor3Field = PolyField<Tensor3d>;
using HyperstressField = PolyField<Tensor3Symd>;

// ---------------------------------------------------------------------------
// Exact differentiation

/// Componentwise partial derivative along one axis.
template <typename Coef>
PolyField<Coef> derivative(const PolyField<Coef>& f, int axis) {
  using Scalar = typename PolyField<Coef>::Scalar;
  PolyField<Coef> out;
  for (const auto& t : f.terms())
    if (t.exp[axis] > 0) out.add_term(t.exp.lowered(axis), t.coef * Scalar(t.exp[axis]));
  return out;
}

/// (grad f)_k = df/dx_k; the new last index is the derivative index.
template <std::floating_point S>
PolyField<Vec3<S>> grad(const PolyField<S>& f) {
  PolyField<Vec3<S>> out;
  for (int d = 0; d < 3; ++d) {
    const PolyField<S> df = derivative(f, d);
    for (const auto& t : df.terms()) {
      Vec3<S> c = Vec3<S>::Zero();
      c[d] = t.coef;
      out.add_term(t.exp, c);
    }
  }
  return out;
}

/// (grad v)_ij = dv_i/dx_j.
template <typename S>
PolyField<Mat3<S>> grad(const PolyField<Vec3<S>>& v) {
  PolyField<Mat3<S>> out;
  for (int d = 0; d < 3; ++d) {
    const PolyField<Vec3<S>> dv = derivative(v, d);
    for (const auto& t : dv.terms()) {
      Mat3<S> c = Mat3<S>::Zero();
      c.col(d) = t.coef;
      out.add_term(t.exp, c);
    }
  }
  return out;
}

/// (grad T)_ijk = dT_ij/dx_k.
template <typename S>
PolyField<Tensor3<S>> grad(const PolyField<Mat3<S>>& f) {
  PolyField<Tensor3<S>> out;
  for (int d = 0; d < 3; ++d) {
    const PolyField<Mat3<S>> df = derivative(f, d);
    for (const auto& t : df.terms()) {
      Tensor3<S> c;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c(i, j, d) = t.coef(i, j);
      out.add_term(t.exp, c);
    }
  }
  return out;
}

/// div v = dv_k/dx_k.
template <typename S>
PolyField<S> div(const PolyField<Vec3<S>>& v) {
  PolyField<S> out;
  for (int d = 0; d < 3; ++d) {
    const PolyField<Vec3<S>> dv = derivative(v, d);
    for (const auto& t : dv.terms()) out.add_term(t.exp, t.coef[d]);
  }
  return out;
}

/// (div T)_i = dT_ij/dx_j.
template <typename S>
PolyField<Vec3<S>> div(const PolyField<Mat3<S>>& f) {
  PolyField<Vec3<S>> out;
  for (int d = 0; d < 3; ++d) {
    const PolyField<Mat3<S>> df = derivative(f, d);
    for (const auto& t : df.terms()) out.add_term(t.exp, Vec3<S>(t.coef.col(d)));
  }
  return out;
}

/// (div H)_ij = dH_ijk/dx_k.
template <typename S>
PolyField<Mat3<S>> div(const PolyField<Tensor3<S>>& f) {
  PolyField<Mat3<S>> out;
  for (int d = 0; d < 3; ++d) {
    const PolyField<Tensor3<S>> df = derivative(f, d);
    for (const auto& t : df.terms()) {
      Mat3<S> c;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c(i, j) = t.coef(i, j, d);
      out.add_term(t.exp, c);
    }
  }
  return out;
}

template <typename S>
PolyField<Mat3<S>> div(const PolyField<Tensor3Sym<S>>& f) {
  PolyField<Mat3<S>> out;
  for (int d = 0; d < 3; ++d) {
    const PolyField<Tensor3Sym<S>> df = derivative(f, d);
    for (const auto& t : df.terms()) {
      Mat3<S> c;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c(i, j) = t.coef(i, j, d);
      out.add_term(t.exp, c);
    }
  }
  return out;
}

template <typename S>
PolyField<Vec3<S>> curl(const PolyField<Vec3<S>>& v) {
  const PolyField<Vec3<S>> d0 = derivative(v, 0);
  const PolyField<Vec3<S>> d1 = derivative(v, 1);
  const PolyField<Vec3<S>> d2 = derivative(v, 2);
  PolyField<Vec3<S>> out;
  auto add = [&out](const PolyField<Vec3<S>>& src, int from, int to, S sign) {
    for (const auto& t : src.terms()) {
      Vec3<S> c = Vec3<S>::Zero();
      c[to] = sign * t.coef[from];
      out.add_term(t.exp, c);
    }
  };
  // (curl v)_0 = d1 v_2 - d2 v_1, and cyclic.
  add(d1, 2, 0, S(1));
  add(d2, 1, 0, S(-1));
  add(d2, 0, 1, S(1));
  add(d0, 2, 1, S(-1));
  add(d0, 1, 2, S(1));
  add(d1, 0, 2, S(-1));
  return out;
}

/// Componentwise Laplacian, computed with a single integer second-derivative
/// factor per term so it is an independent route from div(grad(.)).
template <typename S>
PolyField<Vec3<S>> laplacian(const PolyField<Vec3<S>>& v) {
  PolyField<Vec3<S>> out;
  for (const auto& t : v.terms())
    for (int d = 0; d < 3; ++d) {
      const int f = t.exp[d] * (t.exp[d] - 1);
      if (f > 0) out.add_term(t.exp.lowered(d, 2), t.coef * S(f));
    }
  return out;
}

/// Second velocity gradient packed into right-pair-symmetric coefficients.
/// Each coefficient is produced from one integer factor, so the mixed
/// partials are equal by construction, not merely after rounding.
template <typename S>
PolyField<Tensor3Sym<S>> grad2_velocity(const PolyField<Vec3<S>>& v) {
  PolyField<Tensor3Sym<S>> out;
  for (const auto& t : v.terms())
    for (int j = 0; j < 3; ++j)
      for (int k = j; k < 3; ++k) {
        const int f = (j == k) ? t.exp[j] * (t.exp[j] - 1) : t.exp[j] * t.exp[k];
        if (f <= 0) continue;
        Exponent e = t.exp.lowered(j);
        e = e.lowered(k);
        Tensor3Sym<S> c;
        for (int i = 0; i < 3; ++i) c.set(i, j, k, t.coef[i] * S(f));
        out.add_term(e, c);
      }
  return out;
}

/// Coefficientwise (H(x) a): a second-order field.
template <typename S, typename Derived>
PolyField<Mat3<S>> apply_vector(const PolyField<Tensor3Sym<S>>& h,
                                const Eigen::MatrixBase<Derived>& a_expr) {
  const Vec3<S> a = a_expr;
  PolyField<Mat3<S>> out;
  for (const auto& t : h.terms()) out.add_term(t.exp, apply_vector(t.coef, a));
  return out;
}

/// Coefficientwise H(x)[A]: a vector field.
template <typename S, typename Derived>
PolyField<Vec3<S>> contract2(const PolyField<Tensor3Sym<S>>& h,
                             const Eigen::MatrixBase<Derived>& a_expr) {
  const Mat3<S> a = a_expr;
  PolyField<Vec3<S>> out;
  for (const auto& t : h.terms()) out.add_term(t.exp, contract2(t.coef, a));
  return out;
}

// ---------------------------------------------------------------------------
// Surface divergence on flat faces

/// Deterministic orthonormal tangent pair for a unit normal: Gram-Schmidt of
/// the coordinate axis least aligned with n, then the cross product.
inline std::array<Vec3d, 2> tangent_basis(const Vec3d& n) {
  int a = 0;
  for (int d = 1; d < 3; ++d)
    if (std::abs(n[d]) < std::abs(n[a])) a = d;
  Vec3d t1 = Vec3d::Zero();
  t1[a] = 1.0;
  t1 -= t1.dot(n) * n;
  t1.normalize();
  const Vec3d t2 = n.cross(t1);
  return {t1, t2};
}

/// Surface divergence of a tangential second-order surface field from the
/// spatial gradient g of the underlying map: sum_a (g . t_a) t_a.
inline Vec3d surface_div_from_gradient(const Tensor3d& g, const Vec3d& n) {
  const auto [t1, t2] = tangent_basis(n);
  return g.contract_last(t1) * t1 + g.contract_last(t2) * t2;
}

/// Surface divergence of (H n) restricted to the flat face through x with
/// unit normal n. The face being flat, only tangential directional
/// derivatives of the spatial field H n enter.
inline Vec3d surface_div_flat(const HyperstressField& h, const Vec3d& x, const Vec3d& n) {
  if (std::abs(n.norm() - 1.0) > kTol.unit_vector)
    throw std::invalid_argument("surface_div_flat: normal is not a unit vector");
  const Tensor3Field g = grad(apply_vector(h, n));
  return surface_div_from_gradient(g(x), n);
}

// ---------------------------------------------------------------------------
// Rank-erased view, used by the file formats where rank is runtime data.

using FieldVariant = std::variant<ScalarField, VectorField, Tensor2Field, Tensor3Field>;

inline int rank(const FieldVariant& f) { return static_cast<int>(f.index()); }

inline FieldVariant grad(const FieldVariant& f) {
  return std::visit(
      [](const auto& field) -> FieldVariant {
        using T = std::decay_t<decltype(field)>;
        if constexpr (std::is_same_v<T, Tensor3Field>)
          throw std::invalid_argument("grad: rank-3 input would exceed the supported tensor order");
        else
          return FieldVariant(grad(field));
      },
      f);
}

inline FieldVariant div(const FieldVariant& f) {
  return std::visit(
      [](const auto& field) -> FieldVariant {
        using T = std::decay_t<decltype(field)>;
        if constexpr (std::is_same_v<T, ScalarField>)
          throw std::invalid_argument("div: rank-0 input has no divergence");
        else
          return FieldVariant(div(field));
      },
      f);
}

/// Symbolic incompressibility test: div v has no nonzero coefficients.
inline bool is_divergence_free(const VelocityField& v) { return div(v).is_zero(); }

}  // namespace hsk
