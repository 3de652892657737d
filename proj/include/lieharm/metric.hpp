#pragma once

#include "lieharm/algebra.hpp"
#include "lieharm/linalg.hpp"
#include "lieharm/params.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lieharm {

/// Exact square root of a rational when one exists.
std::optional<Rational> rational_sqrt(const Rational& x);

/// Sum-ready frame: vectors f_i with weights w_i such that the vectors are
/// pairwise orthogonal and w_i = 1 / <f_i, f_i>.  Then for any bilinear B,
///   sum_i w_i B(f_i, f_i) = sum_i B(e_i, e_i)
/// over any orthonormal basis e_i.  The float path uses an orthonormal frame
/// (all weights 1); the rational path keeps the frame unnormalised so no
/// square roots are needed.
template <Scalar T>
struct WeightedFrame {
  std::array<Vec3<T>, 3> vectors;
  std::array<T, 3> weights;
  const char* construction = "";
};

/// A left-invariant metric, i.e. a symmetric positive-definite Gram matrix
/// G(i,j) = <X_i, X_j>.
template <Scalar T>
class Metric {
 public:
  explicit Metric(Mat3<T> gram) : gram_(std::move(gram)) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (gram_(i, j) != gram_(j, i)) throw Error(ErrorKind::DegenerateMetric, "Gram matrix is not symmetric");
    check_positive_definite();
    inverse_ = inverse(gram_);
    frame_ = build_frame();
  }

  const Mat3<T>& gram() const { return gram_; }
  const Mat3<T>& gram_inverse() const { return inverse_; }
  const WeightedFrame<T>& frame() const { return frame_; }

  T inner(const Vec3<T>& u, const Vec3<T>& v) const { return dot(u, gram_ * v); }

  /// The vector whose inner products with X_1..X_3 are t.
  Vec3<T> raise(const Vec3<T>& t) const { return inverse_ * t; }

 private:
  void check_positive_definite() const {
    if constexpr (is_exact_v<T>) {
      const auto& g = gram_;
      const T m1 = g(0, 0);
      const T m2 = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
      const T m3 = g.det();
      if (!(m1 > 0 && m2 > 0 && m3 > 0))
        throw Error(ErrorKind::DegenerateMetric, "Gram matrix is not positive definite (leading minors)");
    } else {
      for (double x : gram_.a)
        if (!std::isfinite(x)) throw Error(ErrorKind::DegenerateMetric, "Gram matrix has non-finite entries");
      cholesky_upper(gram_);  // throws on failure
    }
  }

 public:
  /// Upper-triangular R with G = R^T R; throws DegenerateMetric.
  static Mat3<double> cholesky_upper(const Mat3<double>& g) {
    Mat3<double> r;
    for (int j = 0; j < 3; ++j) {
      double d = g(j, j);
      for (int k = 0; k < j; ++k) d -= r(k, j) * r(k, j);
      if (!(d > 0.0)) throw Error(ErrorKind::DegenerateMetric, "Gram matrix is not positive definite (Cholesky)");
      r(j, j) = std::sqrt(d);
      for (int i = j + 1; i < 3; ++i) {
        double s = g(j, i);
        for (int k = 0; k < j; ++k) s -= r(k, j) * r(k, i);
        r(j, i) = s / r(j, j);
      }
    }
    return r;
  }

 private:
  WeightedFrame<T> build_frame() const {
    WeightedFrame<T> f;
    if constexpr (is_exact_v<T>) {
      // G = L D L^T with L unit lower triangular; columns of L^{-T} are
      // G-orthogonal with squared norms D.
      Mat3<T> l = Mat3<T>::identity();
      std::array<T, 3> d;
      for (int j = 0; j < 3; ++j) {
        T s = gram_(j, j);
        for (int k = 0; k < j; ++k) s -= l(j, k) * l(j, k) * d[static_cast<std::size_t>(k)];
        d[static_cast<std::size_t>(j)] = s;
        for (int i = j + 1; i < 3; ++i) {
          T t = gram_(i, j);
          for (int k = 0; k < j; ++k) t -= l(i, k) * l(j, k) * d[static_cast<std::size_t>(k)];
          l(i, j) = t / d[static_cast<std::size_t>(j)];
        }
      }
      const Mat3<T> basis = inverse(l).transpose();
      for (int i = 0; i < 3; ++i) {
        f.vectors[static_cast<std::size_t>(i)] = basis.column(i);
        f.weights[static_cast<std::size_t>(i)] = T(1) / d[static_cast<std::size_t>(i)];
      }
      f.construction = "ldl-orthogonal";
    } else {
      const Mat3<double> e = inverse(cholesky_upper(gram_));
      for (int i = 0; i < 3; ++i) {
        f.vectors[static_cast<std::size_t>(i)] = e.column(i);
        f.weights[static_cast<std::size_t>(i)] = 1.0;
      }
      f.construction = "cholesky-orthonormal";
    }
    return f;
  }

  Mat3<T> gram_;
  Mat3<T> inverse_;
  WeightedFrame<T> frame_;
};

/// Columns are an orthonormal basis: E^T G E = I.  Float path: E = R^{-1}
/// from the Cholesky factor.  Rational path: normalises the LDL^T frame and
/// throws NotRational unless every squared norm is a rational square.
Mat3<double> orthonormal_frame(const Metric<double>& m);
Mat3<Rational> orthonormal_frame(const Metric<Rational>& m);

/// Adjoint of L : (src) -> (dst) with respect to the two inner products,
/// <L* u, v>_src = <u, L v>_dst, i.e. L* = G_src^{-1} L^T G_dst.
template <Scalar T>
Mat3<T> adjoint_map(const Metric<T>& src, const Metric<T>& dst, const Mat3<T>& l) {
  return src.gram_inverse() * l.transpose() * dst.gram();
}

/// Metric equivalence-class families per algebra.  Tags and parameters:
///   nil      (lambda)           Diag(lambda, lambda, 1), lambda > 0
///   e02      (mu, nu)           Diag(1, mu, nu), 0 < mu <= 1, nu > 0
///   sol      (mu, nu)           [[1,1,0],[1,mu,0],[0,0,nu]], mu > 1, nu > 0
///   sol-diag (nu)               Diag(1, 1, nu), nu > 0
///   su2      (lambda, mu, nu)   Diag(lambda, mu, nu), 0 < nu <= mu <= lambda
///   sl2      (lambda, mu, nu)   Diag(lambda, mu, nu), 0 < lambda <= mu, nu > 0
///   diag     (lambda, mu, nu)   any positive diagonal (no ordering)
struct MetricFamilyInfo {
  std::string tag;
  AlgebraId algebra;
  std::vector<std::string> params;
};

const std::vector<MetricFamilyInfo>& metric_families();
const MetricFamilyInfo& metric_family_info(std::string_view tag);  // throws UnknownId

/// Builds the family Gram matrix reading parameters "<name><suffix>", e.g.
/// suffix "2" reads mu2, nu2.  Throws ParamOutOfRange naming the constraint.
template <Scalar T>
Metric<T> metric_family(std::string_view tag, const ParamSet<T>& p, std::string_view suffix = "") {
  const MetricFamilyInfo& info = metric_family_info(tag);
  auto get = [&](const char* name) { return p.get(std::string(name) + std::string(suffix)); };
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::ParamOutOfRange, info.tag + " metric requires " + what);
  };
  const T zero(0), one(1);
  if (info.tag == "nil") {
    const T l = get("lambda");
    require(l > zero, "lambda > 0");
    return Metric<T>(Mat3<T>::diag(l, l, one));
  }
  if (info.tag == "e02") {
    const T mu = get("mu"), nu = get("nu");
    require(mu > zero && mu <= one, "0 < mu <= 1");
    require(nu > zero, "nu > 0");
    return Metric<T>(Mat3<T>::diag(one, mu, nu));
  }
  if (info.tag == "sol") {
    const T mu = get("mu"), nu = get("nu");
    require(mu > one, "mu > 1");
    require(nu > zero, "nu > 0");
    return Metric<T>(Mat3<T>::rows({one, one, zero, one, mu, zero, zero, zero, nu}));
  }
  if (info.tag == "sol-diag") {
    const T nu = get("nu");
    require(nu > zero, "nu > 0");
    return Metric<T>(Mat3<T>::diag(one, one, nu));
  }
  const T l = get("lambda"), mu = get("mu"), nu = get("nu");
  if (info.tag == "su2") {
    require(nu > zero && nu <= mu && mu <= l, "0 < nu <= mu <= lambda");
  } else if (info.tag == "sl2") {
    require(l > zero && l <= mu, "0 < lambda <= mu");
    require(nu > zero, "nu > 0");
  } else {
    require(l > zero && mu > zero && nu > zero, "positive diagonal");
  }
  return Metric<T>(Mat3<T>::diag(l, mu, nu));
}

}  // namespace lieharm
