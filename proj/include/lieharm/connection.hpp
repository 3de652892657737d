#pragma once

#include "lieharm/algebra.hpp"
#include "lieharm/metric.hpp"

namespace lieharm {

/// Levi-Civita product on basis pairs: A_{X_i} X_j = (*this)(i, j).
template <Scalar T>
struct LCProduct {
  std::array<Vec3<T>, 9> a;

  const Vec3<T>& operator()(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }
  Vec3<T>& operator()(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
};

/// Solves G A_{X_i}X_j = rhs with
///   rhs_k = 1/2 (<[X_i,X_j],X_k> + <[X_k,X_i],X_j> + <[X_k,X_j],X_i>).
template <Scalar T>
LCProduct<T> levi_civita(const LieAlgebra<T>& g, const Metric<T>& m) {
  LCProduct<T> out;
  const T half = T(1) / T(2);
  for (int i = 0; i < 3; ++i) {
    const auto xi = Vec3<T>::basis(i);
    for (int j = 0; j < 3; ++j) {
      const auto xj = Vec3<T>::basis(j);
      Vec3<T> rhs;
      for (int k = 0; k < 3; ++k) {
        const auto xk = Vec3<T>::basis(k);
        rhs[k] = half * (m.inner(g.bracket(xi, xj), xk) + m.inner(g.bracket(xk, xi), xj) +
                         m.inner(g.bracket(xk, xj), xi));
      }
      out(i, j) = solve(m.gram(), rhs);
    }
  }
  return out;
}

/// A Lie algebra with a metric and its cached Levi-Civita product.
template <Scalar T>
class MetricLieAlgebra {
 public:
  MetricLieAlgebra(LieAlgebra<T> g, Metric<T> m)
      : algebra_(std::move(g)), metric_(std::move(m)), lc_(levi_civita(algebra_, metric_)) {}

  const LieAlgebra<T>& algebra() const { return algebra_; }
  const Metric<T>& metric() const { return metric_; }
  const LCProduct<T>& lc() const { return lc_; }

  /// A_u v by bilinear expansion.
  Vec3<T> product(const Vec3<T>& u, const Vec3<T>& v) const {
    Vec3<T> r;
    for (int i = 0; i < 3; ++i) {
      if (is_zero(u[i])) continue;
      for (int j = 0; j < 3; ++j) {
        if (is_zero(v[j])) continue;
        r += (u[i] * v[j]) * lc_(i, j);
      }
    }
    return r;
  }

  /// Matrix of w -> A_u w.
  Mat3<T> product_matrix(const Vec3<T>& u) const {
    return Mat3<T>::from_columns(product(u, Vec3<T>::basis(0)), product(u, Vec3<T>::basis(1)),
                                 product(u, Vec3<T>::basis(2)));
  }

  /// sum_i A_{e_i} e_i over the metric's weighted frame.
  Vec3<T> unimodular_vector() const {
    const auto& f = metric_.frame();
    Vec3<T> u;
    for (std::size_t i = 0; i < 3; ++i) u += f.weights[i] * product(f.vectors[i], f.vectors[i]);
    return u;
  }

  /// sum_i A_{e_i} e_i over the columns of a caller-supplied orthonormal frame.
  Vec3<T> unimodular_vector(const Mat3<T>& orthonormal) const {
    Vec3<T> u;
    for (int i = 0; i < 3; ++i) u += product(orthonormal.column(i), orthonormal.column(i));
    return u;
  }

  /// U with <U, v> = tr(ad_v).
  Vec3<T> unimodular_vector_from_traces() const {
    Vec3<T> t;
    for (int k = 0; k < 3; ++k) t[k] = algebra_.ad(Vec3<T>::basis(k)).trace();
    return metric_.raise(t);
  }

  /// K(u,v) = [A_u, A_v] - A_{[u,v]}.
  Mat3<T> curvature(const Vec3<T>& u, const Vec3<T>& v) const {
    const Mat3<T> au = product_matrix(u), av = product_matrix(v);
    return au * av - av * au - product_matrix(algebra_.bracket(u, v));
  }

  /// Max |A_{X_i}X_j - A_{X_j}X_i - [X_i,X_j]|.
  double torsion_residual() const {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r = std::max(r, (lc_(i, j) - lc_(j, i) - algebra_.bracket(Vec3<T>::basis(i), Vec3<T>::basis(j))).max_abs());
    return r;
  }

  /// Max |<A_{X_i}X_j, X_k> + <X_j, A_{X_i}X_k>|.
  double compatibility_residual() const {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const T s = metric_.inner(lc_(i, j), Vec3<T>::basis(k)) + metric_.inner(Vec3<T>::basis(j), lc_(i, k));
          r = std::max(r, abs_value(s));
        }
    return r;
  }

 private:
  LieAlgebra<T> algebra_;
  Metric<T> metric_;
  LCProduct<T> lc_;
};

}  // namespace lieharm
