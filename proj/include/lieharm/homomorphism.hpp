#pragma once

#include "lieharm/algebra.hpp"
#include "lieharm/metric.hpp"
#include "lieharm/params.hpp"
#include "lieharm/random.hpp"

#include <numbers>
#include <string>
#include <vector>

namespace lieharm {

/// Linear map between two catalog algebras; column j is the image of X_j.
template <Scalar T>
struct Homomorphism {
  AlgebraId src;
  AlgebraId dst;
  Mat3<T> m;
};

struct BracketResidual {
  double max_abs = 0.0;  // max over the 9 scalar equations
  double scale = 0.0;    // largest entry on either side, for relative judgement
};

template <Scalar T>
BracketResidual bracket_residual(const LieAlgebra<T>& src, const LieAlgebra<T>& dst, const Mat3<T>& m) {
  BracketResidual r;
  r.scale = m.max_abs() * m.max_abs();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Vec3<T> lhs = m * src.bracket(Vec3<T>::basis(i), Vec3<T>::basis(j));
      const Vec3<T> rhs = dst.bracket(m.column(i), m.column(j));
      r.max_abs = std::max(r.max_abs, (lhs - rhs).max_abs());
      r.scale = std::max({r.scale, lhs.max_abs(), rhs.max_abs()});
    }
  return r;
}

/// Exact zero on rationals; on floats residual <= tol * max(1, scale).
template <Scalar T>
bool residual_passes(const BracketResidual& r, double tol) {
  if constexpr (is_exact_v<T>)
    return r.max_abs == 0.0;
  else
    return r.max_abs <= tol * std::max(1.0, r.scale);
}

inline constexpr double kValidateTol = 1e-12;

template <Scalar T>
bool validate(const Homomorphism<T>& h, double tol = kValidateTol) {
  const auto r = bracket_residual(catalog<T>(h.src), catalog<T>(h.dst), h.m);
  return residual_passes<T>(r, tol);
}

/// Throws NotHomomorphism with the residual when validation fails.
template <Scalar T>
void require_homomorphism(const Homomorphism<T>& h, double tol = kValidateTol) {
  const auto r = bracket_residual(catalog<T>(h.src), catalog<T>(h.dst), h.m);
  if (!residual_passes<T>(r, tol))
    throw Error(ErrorKind::NotHomomorphism,
                "bracket residual " + std::to_string(r.max_abs) + " (scale " + std::to_string(r.scale) + ")");
}

// Rotation and boost generators.  rot_yz, rot_xz, rot_xy are xi_1, xi_2,
// xi_3 on su(2); boost_yz, boost_xz, rot_xy are xi_1, xi_2, xi_3 on sl(2,R).
Mat3<double> rot_yz(double a);
Mat3<double> rot_xz(double a);
Mat3<double> rot_xy(double a);
Mat3<double> boost_yz(double a);
Mat3<double> boost_xz(double a);

struct ParamRange {
  std::string name;
  double lo;
  double hi;
};

/// A parameterised homomorphism family.  Tags:
///   nil                         alpha1 alpha2 alpha3 beta1 beta2 beta3
///   e02-xi1, sol-xi1            a b gamma          (gamma^2 != 1)
///   e02-xi2, e02-xi3            alpha beta a b
///   sol-xi2, sol-xi3            alpha beta a b
///   su2-xi1/xi2/xi3             a
///   sl2-xi1/xi2/xi3             a
///   su2-xi3xi2xi1, sl2-xi3xi2xi1  a b c   (xi3(a) xi2(b) xi1(c))
struct FamilySpec {
  std::string tag;
  AlgebraId algebra;
  std::vector<ParamRange> params;
  bool float_only = false;
};

const std::vector<FamilySpec>& family_catalog();
const FamilySpec& family_spec(std::string_view tag);  // throws UnknownId

namespace detail {
Mat3<double> trig_family_matrix(const FamilySpec& f, const ParamSet<double>& p);
}

/// The printed matrix, without validation.
template <Scalar T>
Mat3<T> family_matrix(const FamilySpec& f, const ParamSet<T>& p) {
  const T zero(0), one(1);
  auto g = [&](const char* n) -> const T& { return p.get(n); };
  if (f.float_only) {
    if constexpr (is_exact_v<T>)
      throw Error(ErrorKind::NotRational, "family " + f.tag + " needs trigonometric entries");
    else
      return detail::trig_family_matrix(f, p);
  }
  if (f.tag == "nil")
    return Mat3<T>::rows({g("alpha1"), g("alpha2"), zero, g("beta1"), g("beta2"), zero, g("alpha3"), g("beta3"),
                          g("alpha1") * g("beta2") - g("alpha2") * g("beta1")});
  if (f.tag == "e02-xi1" || f.tag == "sol-xi1") {
    const T gamma = g("gamma");
    if (abs_value(T(gamma * gamma - one)) <= (is_exact_v<T> ? 0.0 : 1e-9))
      throw Error(ErrorKind::ParamOutOfRange, f.tag + " requires gamma^2 != 1");
    return Mat3<T>::rows({zero, zero, g("a"), zero, zero, g("b"), zero, zero, gamma});
  }
  const T &al = g("alpha"), &be = g("beta"), &a = g("a"), &b = g("b");
  if (f.tag == "e02-xi2") return Mat3<T>::rows({al, T(-be), a, be, al, b, zero, zero, one});
  if (f.tag == "e02-xi3") return Mat3<T>::rows({al, be, a, be, T(-al), b, zero, zero, T(-1)});
  if (f.tag == "sol-xi2") return Mat3<T>::rows({al, zero, a, zero, be, b, zero, zero, one});
  if (f.tag == "sol-xi3") return Mat3<T>::rows({zero, be, a, al, zero, b, zero, zero, T(-1)});
  throw Error(ErrorKind::UnknownId, "unknown family '" + f.tag + "'");
}

/// The printed matrix, range-checked and validated.
template <Scalar T>
Homomorphism<T> instantiate(const FamilySpec& f, const ParamSet<T>& p) {
  Homomorphism<T> h{f.algebra, f.algebra, family_matrix(f, p)};
  require_homomorphism(h);
  return h;
}

template <Scalar T>
Homomorphism<T> instantiate(std::string_view tag, const ParamSet<T>& p) {
  return instantiate(family_spec(tag), p);
}

/// A conjugated homomorphism with the metrics that make phi1, phi2 isometries.
template <Scalar T>
struct Conjugated {
  Homomorphism<T> xi;
  Metric<T> metric1;
  Metric<T> metric2;
};

/// Metric making phi an isometry from (g, m) onto (g, pushed): phi^{-T} G phi^{-1}.
template <Scalar T>
Metric<T> push_forward(const Metric<T>& m, const Mat3<T>& phi) {
  const Mat3<T> inv = inverse(phi);
  Mat3<T> g = inv.transpose() * m.gram() * inv;
  if constexpr (!is_exact_v<T>) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) g(i, j) = g(j, i) = 0.5 * (g(i, j) + g(j, i));
  }
  return Metric<T>(g);
}

/// phi2 . xi . phi1^{-1} with pushed-forward metrics.
template <Scalar T>
Conjugated<T> conjugate(const Homomorphism<T>& h, const Mat3<T>& phi1, const Mat3<T>& phi2, const Metric<T>& m1,
                        const Metric<T>& m2) {
  auto check = [](AlgebraId id, const Mat3<T>& phi, const char* which) {
    if (!validate(Homomorphism<T>{id, id, phi}))
      throw Error(ErrorKind::NotAutomorphism, std::string(which) + " does not preserve the bracket");
    if (is_zero(phi.det())) throw Error(ErrorKind::Singular, std::string(which) + " is not invertible");
  };
  check(h.src, phi1, "phi1");
  check(h.dst, phi2, "phi2");
  return {Homomorphism<T>{h.src, h.dst, phi2 * h.m * inverse(phi1)}, push_forward(m1, phi1), push_forward(m2, phi2)};
}

/// Rational points on the circle / hyperbola for exact rotations and boosts.
template <Scalar T>
std::pair<T, T> rational_cos_sin(const T& t) {
  const T d = T(1) + t * t;
  return {(T(1) - t * t) / d, (T(2) * t) / d};
}
template <Scalar T>
std::pair<T, T> rational_cosh_sinh(const T& t) {  // |t| < 1
  const T d = T(1) - t * t;
  return {(T(1) + t * t) / d, (T(2) * t) / d};
}

/// A random automorphism of a catalog algebra.  su(2) and sl(2,R) use
/// rational parametrisations of rotations and boosts so both paths work.
template <Scalar T>
Mat3<T> random_automorphism(AlgebraId id, Rng& rng) {
  Draw<T> d{rng};
  const T zero(0), one(1);
  switch (id) {
    case AlgebraId::Nil:
      for (;;) {
        const T a1 = d.uniform(-3, 3), a2 = d.uniform(-3, 3), b1 = d.uniform(-3, 3), b2 = d.uniform(-3, 3);
        const T det = a1 * b2 - a2 * b1;
        if (abs_value(det) < 0.1) continue;
        return Mat3<T>::rows({a1, a2, zero, b1, b2, zero, d.uniform(-3, 3), d.uniform(-3, 3), det});
      }
    case AlgebraId::E02:
    case AlgebraId::Sol: {
      const T al = d.nonzero(-3, 3), be = d.nonzero(-3, 3), a = d.uniform(-3, 3), b = d.uniform(-3, 3);
      const bool second = d.coin();
      const char* tag = id == AlgebraId::E02 ? (second ? "e02-xi2" : "e02-xi3") : (second ? "sol-xi2" : "sol-xi3");
      return family_matrix(family_spec(tag), ParamSet<T>{{"alpha", al}, {"beta", be}, {"a", a}, {"b", b}});
    }
    case AlgebraId::Su2:
    case AlgebraId::Sl2: {
      auto rot = [&](int axis) {
        auto [c, s] = rational_cos_sin(d.uniform(-2, 2));
        if (axis == 3) return Mat3<T>::rows({c, s, zero, T(-s), c, zero, zero, zero, one});
        if (axis == 2) return Mat3<T>::rows({c, zero, s, zero, one, zero, T(-s), zero, c});
        return Mat3<T>::rows({one, zero, zero, zero, c, s, zero, T(-s), c});
      };
      if (id == AlgebraId::Su2) return rot(3) * rot(2) * rot(1);
      auto boost = [&](int axis) {
        auto [ch, sh] = rational_cosh_sinh(d.uniform(-0.6, 0.6));
        if (axis == 2) return Mat3<T>::rows({ch, zero, sh, zero, one, zero, sh, zero, ch});
        return Mat3<T>::rows({one, zero, zero, zero, ch, sh, zero, sh, ch});
      };
      return rot(3) * boost(2) * boost(1);
    }
  }
  throw Error(ErrorKind::UnknownId, "unknown algebra");
}

}  // namespace lieharm
