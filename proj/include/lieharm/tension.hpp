#pragma once

#include "lieharm/connection.hpp"
#include "lieharm/homomorphism.hpp"

#include <string>

namespace lieharm {

/// xi : (g, <,>_1) -> (h, <,>_2), validated on construction.
template <Scalar T>
class Problem {
 public:
  Problem(MetricLieAlgebra<T> src, MetricLieAlgebra<T> dst, Homomorphism<T> xi)
      : src_(std::move(src)), dst_(std::move(dst)), xi_(std::move(xi)) {
    if (src_.algebra().id() != xi_.src || dst_.algebra().id() != xi_.dst)
      throw Error(ErrorKind::NotHomomorphism, "algebra mismatch between problem and map");
    require_homomorphism(xi_);
  }

  Problem(AlgebraId id, Metric<T> m1, Metric<T> m2, Mat3<T> xi)
      : Problem(MetricLieAlgebra<T>(catalog<T>(id), std::move(m1)), MetricLieAlgebra<T>(catalog<T>(id), std::move(m2)),
                Homomorphism<T>{id, id, std::move(xi)}) {}

  const MetricLieAlgebra<T>& src() const { return src_; }
  const MetricLieAlgebra<T>& dst() const { return dst_; }
  const Mat3<T>& xi() const { return xi_.m; }
  const Homomorphism<T>& homomorphism() const { return xi_; }

  /// xi^* = G1^{-1} xi^T G2.
  Mat3<T> xi_adjoint() const { return adjoint_map(src_.metric(), dst_.metric(), xi_.m); }

 private:
  MetricLieAlgebra<T> src_;
  MetricLieAlgebra<T> dst_;
  Homomorphism<T> xi_;
};

namespace detail {

// The frame-sum formulas, written once.  With Abs = true every input is
// replaced by its absolute value and every subtraction becomes an addition,
// which yields an entrywise bound on the sum of term magnitudes.
template <Scalar T, bool Abs>
class Kernel {
 public:
  Kernel(const std::array<T, 27>& c, const LCProduct<T>& a) : c_(c), a_(a) {}

  Vec3<T> bracket(const Vec3<T>& u, const Vec3<T>& v) const {
    Vec3<T> r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r[k] += u[i] * v[j] * c_[static_cast<std::size_t>(9 * i + 3 * j + k)];
    return r;
  }
  Vec3<T> product(const Vec3<T>& u, const Vec3<T>& v) const {
    Vec3<T> r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r += (u[i] * v[j]) * a_(i, j);
    return r;
  }
  Mat3<T> product_matrix(const Vec3<T>& u) const {
    return Mat3<T>::from_columns(product(u, Vec3<T>::basis(0)), product(u, Vec3<T>::basis(1)),
                                 product(u, Vec3<T>::basis(2)));
  }
  static void minus(Vec3<T>& acc, const Vec3<T>& v) {
    if constexpr (Abs)
      acc += v;
    else
      acc -= v;
  }

  /// sum_i w_i A_{xi f_i} xi f_i - xi(U).
  Vec3<T> tau(const Mat3<T>& xi, const WeightedFrame<T>& f, const Vec3<T>& u_src) const {
    Vec3<T> t;
    for (std::size_t i = 0; i < 3; ++i) {
      const Vec3<T> u = xi * f.vectors[i];
      t += f.weights[i] * product(u, u);
    }
    minus(t, xi * u_src);
    return t;
  }

  /// -sum_i w_i (B_u B_u tau + K(tau,u)u) + B_{xi U} tau, u = xi f_i,
  /// K(x,y) = B_x B_y - B_y B_x - B_[x,y].
  Vec3<T> tau2(const Mat3<T>& xi, const WeightedFrame<T>& f, const Vec3<T>& u_src, const Vec3<T>& tau) const {
    const Mat3<T> bt = product_matrix(tau);
    Vec3<T> t2 = product_matrix(xi * u_src) * tau;
    for (std::size_t i = 0; i < 3; ++i) {
      const Vec3<T> u = xi * f.vectors[i];
      const Mat3<T> bu = product_matrix(u);
      const Vec3<T> bu_u = bu * u;
      Vec3<T> term = bu * (bu * tau) + bt * bu_u;
      minus(term, bu * (bt * u));
      minus(term, product_matrix(bracket(tau, u)) * u);
      minus(t2, f.weights[i] * term);
    }
    return t2;
  }

 private:
  std::array<T, 27> c_;
  LCProduct<T> a_;
};

template <Scalar T>
Kernel<T, false> kernel(const MetricLieAlgebra<T>& m) {
  std::array<T, 27> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(9 * i + 3 * j + k)] = m.algebra().c(i, j, k);
  return Kernel<T, false>(c, m.lc());
}

template <Scalar T>
Kernel<double, true> abs_kernel(const MetricLieAlgebra<T>& m) {
  std::array<double, 27> c;
  LCProduct<double> a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        c[static_cast<std::size_t>(9 * i + 3 * j + k)] = abs_value(m.algebra().c(i, j, k));
        a(i, j)[k] = abs_value(m.lc()(i, j)[k]);
      }
    }
  return Kernel<double, true>(c, a);
}

template <Scalar T>
Vec3<double> abs_vec(const Vec3<T>& v) {
  return {abs_value(v[0]), abs_value(v[1]), abs_value(v[2])};
}

template <Scalar T>
Mat3<double> abs_mat(const Mat3<T>& m) {
  Mat3<double> r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = abs_value(m.a[k]);
  return r;
}

// Every entry replaced by the largest magnitude: terms that vanish only
// because an input entry is (numerically) zero still count at full size.
template <Scalar T>
Vec3<double> flat_vec(const Vec3<T>& v) {
  const double m = v.max_abs();
  return {m, m, m};
}

template <Scalar T>
Mat3<double> flat_mat(const Mat3<T>& m) {
  Mat3<double> r;
  r.a.fill(m.max_abs());
  return r;
}

template <Scalar T>
WeightedFrame<double> abs_frame(const WeightedFrame<T>& f) {
  WeightedFrame<double> r;
  for (std::size_t i = 0; i < 3; ++i) {
    r.vectors[i] = abs_vec(f.vectors[i]);
    r.weights[i] = abs_value(f.weights[i]);
  }
  r.construction = f.construction;
  return r;
}

}  // namespace detail

/// Tension field by the frame sum.
template <Scalar T>
Vec3<T> tau(const Problem<T>& p) {
  return detail::kernel(p.dst()).tau(p.xi(), p.src().metric().frame(), p.src().unimodular_vector());
}

/// Bitension field by the frame sum, given tau (defaults to tau(p)).
template <Scalar T>
Vec3<T> tau2(const Problem<T>& p, const Vec3<T>& t) {
  return detail::kernel(p.dst()).tau2(p.xi(), p.src().metric().frame(), p.src().unimodular_vector(), t);
}

template <Scalar T>
Vec3<T> tau2(const Problem<T>& p) {
  return tau2(p, tau(p));
}

/// Bound on the sum of absolute term magnitudes in tau over all maps whose
/// entries are at most max|xi|.
template <Scalar T>
double tau_scale(const Problem<T>& p) {
  const auto k = detail::abs_kernel(p.dst());
  return k.tau(detail::flat_mat(p.xi()), detail::abs_frame(p.src().metric().frame()),
               detail::abs_vec(p.src().unimodular_vector()))
      .max_abs();
}

template <Scalar T>
double tau2_scale(const Problem<T>& p, const Vec3<T>& t) {
  const auto k = detail::abs_kernel(p.dst());
  return k.tau2(detail::flat_mat(p.xi()), detail::abs_frame(p.src().metric().frame()),
                detail::abs_vec(p.src().unimodular_vector()), detail::flat_vec(t))
      .max_abs();
}

/// <tau, X_j>_2 = tr(xi^* ad_{X_j} xi).
template <Scalar T>
Vec3<T> tau_via_trace(const Problem<T>& p) {
  const Mat3<T> xs = p.xi_adjoint();
  const auto& h = p.dst().algebra();
  Vec3<T> t;
  for (int j = 0; j < 3; ++j) t[j] = (xs * h.ad(Vec3<T>::basis(j)) * p.xi()).trace();
  return p.dst().metric().raise(t);
}

/// <tau2, X_j>_2 = tr(xi^* (ad_j + ad_j^*) ad_tau xi) - <[X_j, tau], tau>_2,
/// with tau taken from the trace path.
template <Scalar T>
Vec3<T> tau2_via_trace(const Problem<T>& p) {
  const Vec3<T> t = tau_via_trace(p);
  const Mat3<T> xs = p.xi_adjoint();
  const auto& h = p.dst().algebra();
  const auto& m2 = p.dst().metric();
  const Mat3<T> ad_t = h.ad(t);
  Vec3<T> r;
  for (int j = 0; j < 3; ++j) {
    const Vec3<T> xj = Vec3<T>::basis(j);
    const Mat3<T> ad_j = h.ad(xj);
    const Mat3<T> ad_j_star = adjoint_map(m2, m2, ad_j);
    r[j] = (xs * (ad_j + ad_j_star) * ad_t * p.xi()).trace() - m2.inner(h.bracket(xj, t), t);
  }
  return m2.raise(r);
}

/// m_ij = tr(xi^*(ad_i + ad_i^*) ad_j xi) - tr(xi^* ad_[X_i,X_j] xi) in the
/// basis (X1, X2, X3).  Satisfies M tau = G2 tau2.
template <Scalar T>
Mat3<T> test_matrix(const Problem<T>& p) {
  const Mat3<T> xs = p.xi_adjoint();
  const auto& h = p.dst().algebra();
  const auto& m2 = p.dst().metric();
  Mat3<T> m;
  for (int i = 0; i < 3; ++i) {
    const Vec3<T> xi_vec = Vec3<T>::basis(i);
    const Mat3<T> ad_i = h.ad(xi_vec);
    const Mat3<T> sym = ad_i + adjoint_map(m2, m2, ad_i);
    for (int j = 0; j < 3; ++j) {
      const Vec3<T> xj = Vec3<T>::basis(j);
      m(i, j) = (xs * sym * h.ad(xj) * p.xi()).trace() - (xs * h.ad(h.bracket(xi_vec, xj)) * p.xi()).trace();
    }
  }
  return m;
}

inline constexpr double kDefaultTol = 1e-9;

template <Scalar T>
struct TensionReport {
  Vec3<T> tau;
  Vec3<T> tau2;
  Mat3<T> test_matrix;
  T det_test;
  bool harmonic = false;
  bool biharmonic = false;
  double tolerance_used = kDefaultTol;
  ArithmeticPath arithmetic_path = path_of<T>();
  double tau_scale = 0.0;
  double tau2_scale = 0.0;
  double det_scale = 0.0;
  std::string frame;

  bool biharmonic_not_harmonic() const { return biharmonic && !harmonic; }
  /// max|tau| / scale (0 when the scale vanishes).
  double tau_ratio() const { return tau_scale > 0 ? tau.max_abs() / tau_scale : 0.0; }
  double tau2_ratio() const { return tau2_scale > 0 ? tau2.max_abs() / tau2_scale : 0.0; }
};

/// Verdicts: on rationals exact zero tests; on floats
///   harmonic   := max|tau|  <= tol * scale
///   biharmonic := harmonic or max|tau2| <= tol * scale2
/// where the scales bound the sums of absolute term magnitudes.
template <Scalar T>
TensionReport<T> analyze(const Problem<T>& p, double tol = kDefaultTol) {
  if (!(tol > 0)) throw Error(ErrorKind::ParamOutOfRange, "tolerance must be positive");
  TensionReport<T> r;
  r.tau = tau(p);
  r.tau2 = tau2(p, r.tau);
  r.test_matrix = test_matrix(p);
  r.det_test = r.test_matrix.det();
  r.tolerance_used = tol;
  r.tau_scale = tau_scale(p);
  r.tau2_scale = tau2_scale(p, r.tau);
  r.det_scale = r.test_matrix.det_scale();
  r.frame = p.src().metric().frame().construction;
  if constexpr (is_exact_v<T>) {
    r.harmonic = r.tau.is_zero();
    r.biharmonic = r.tau2.is_zero();
  } else {
    r.harmonic = r.tau.max_abs() <= tol * r.tau_scale;
    r.biharmonic = r.harmonic || r.tau2.max_abs() <= tol * r.tau2_scale;
  }
  return r;
}

}  // namespace lieharm
