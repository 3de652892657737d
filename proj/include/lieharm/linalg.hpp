#pragma once

#include "lieharm/errors.hpp"
#include "lieharm/scalar.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>

namespace lieharm {

/// Coordinates of a Lie-algebra element in the fixed basis (X1, X2, X3).
template <Scalar T>
struct Vec3 {
  std::array<T, 3> c{T(0), T(0), T(0)};

  Vec3() = default;
  Vec3(T x, T y, T z) : c{std::move(x), std::move(y), std::move(z)} {}

  static Vec3 basis(int i) {
    Vec3 v;
    v.c[static_cast<std::size_t>(i)] = T(1);
    return v;
  }

  T& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const T& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Vec3& operator+=(const Vec3& o) {
    for (int i = 0; i < 3; ++i) (*this)[i] += o[i];
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    for (int i = 0; i < 3; ++i) (*this)[i] -= o[i];
    return *this;
  }
  Vec3& operator*=(const T& s) {
    for (auto& x : c) x *= s;
    return *this;
  }

  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator-(Vec3 a) { return a *= T(-1); }
  friend Vec3 operator*(const T& s, Vec3 a) { return a *= s; }
  friend Vec3 operator*(Vec3 a, const T& s) { return a *= s; }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.c == b.c; }

  /// Max-abs norm, as a double on both paths.
  double max_abs() const {
    double m = 0.0;
    for (const auto& x : c) m = std::max(m, abs_value(x));
    return m;
  }
  bool is_zero() const {
    for (const auto& x : c)
      if (!lieharm::is_zero(x)) return false;
    return true;
  }
};

template <Scalar T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// Dense 3x3 matrix, row-major. Columns of a linear map are images of X1..X3.
template <Scalar T>
struct Mat3 {
  std::array<T, 9> a{T(0), T(0), T(0), T(0), T(0), T(0), T(0), T(0), T(0)};

  Mat3() = default;

  static Mat3 identity() { return diag(T(1), T(1), T(1)); }
  static Mat3 diag(T x, T y, T z) {
    Mat3 m;
    m(0, 0) = std::move(x);
    m(1, 1) = std::move(y);
    m(2, 2) = std::move(z);
    return m;
  }
  static Mat3 rows(std::initializer_list<T> v) {
    Mat3 m;
    std::size_t k = 0;
    for (const auto& x : v) m.a.at(k++) = x;
    return m;
  }
  static Mat3 from_columns(const Vec3<T>& c0, const Vec3<T>& c1, const Vec3<T>& c2) {
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
      m(i, 0) = c0[i];
      m(i, 1) = c1[i];
      m(i, 2) = c2[i];
    }
    return m;
  }

  T& operator()(int r, int col) { return a[static_cast<std::size_t>(3 * r + col)]; }
  const T& operator()(int r, int col) const { return a[static_cast<std::size_t>(3 * r + col)]; }

  Vec3<T> column(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }

  Mat3 transpose() const {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
    return t;
  }

  T trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }

  T det() const {
    const auto& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

  /// Largest magnitude among the six permutation products of the determinant
  /// expansion; the natural scale against which |det| is judged.
  double det_scale() const {
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    double s = 0.0;
    for (const auto& p : perms) {
      double term = 1.0;
      for (int i = 0; i < 3; ++i) term *= abs_value((*this)(i, p[i]));
      s = std::max(s, term);
    }
    return s;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : a) m = std::max(m, abs_value(x));
    return m;
  }

  Mat3& operator+=(const Mat3& o) {
    for (std::size_t k = 0; k < 9; ++k) a[k] += o.a[k];
    return *this;
  }
  Mat3& operator-=(const Mat3& o) {
    for (std::size_t k = 0; k < 9; ++k) a[k] -= o.a[k];
    return *this;
  }
  Mat3& operator*=(const T& s) {
    for (auto& x : a) x *= s;
    return *this;
  }

  friend Mat3 operator+(Mat3 x, const Mat3& y) { return x += y; }
  friend Mat3 operator-(Mat3 x, const Mat3& y) { return x -= y; }
  friend Mat3 operator-(Mat3 x) { return x *= T(-1); }
  friend Mat3 operator*(const T& s, Mat3 x) { return x *= s; }
  friend bool operator==(const Mat3& x, const Mat3& y) { return x.a == y.a; }

  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T s(0);
        for (int k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
        r(i, j) = s;
      }
    return r;
  }
  friend Vec3<T> operator*(const Mat3& x, const Vec3<T>& v) {
    Vec3<T> r;
    for (int i = 0; i < 3; ++i) r[i] = x(i, 0) * v[0] + x(i, 1) * v[1] + x(i, 2) * v[2];
    return r;
  }
};

namespace detail {

// Gauss-Jordan on [m | rhs]. Exact path pivots on the first nonzero entry;
// float path uses partial pivoting.
template <Scalar T, class Rhs, class RowOp>
void eliminate(Mat3<T>& m, Rhs& rhs, RowOp swap_and_combine) {
  for (int col = 0; col < 3; ++col) {
    int pivot = -1;
    if constexpr (is_exact_v<T>) {
      for (int r = col; r < 3; ++r)
        if (!is_zero(m(r, col))) {
          pivot = r;
          break;
        }
    } else {
      double best = 0.0;
      for (int r = col; r < 3; ++r)
        if (std::fabs(m(r, col)) > best) {
          best = std::fabs(m(r, col));
          pivot = r;
        }
    }
    if (pivot < 0) throw Error(ErrorKind::Singular, "matrix is singular");
    if (pivot != col) {
      for (int j = 0; j < 3; ++j) std::swap(m(col, j), m(pivot, j));
      swap_and_combine(rhs, col, pivot, T(0), /*swap=*/true);
    }
    const T inv = T(1) / m(col, col);
    for (int j = 0; j < 3; ++j) m(col, j) *= inv;
    swap_and_combine(rhs, col, col, inv, /*swap=*/false);
    for (int r = 0; r < 3; ++r) {
      if (r == col || is_zero(m(r, col))) continue;
      const T f = m(r, col);
      for (int j = 0; j < 3; ++j) m(r, j) -= f * m(col, j);
      swap_and_combine(rhs, r, col, f, /*swap=*/false, /*subtract=*/true);
    }
  }
}

}  // namespace detail

/// Solves m x = b.
template <Scalar T>
Vec3<T> solve(Mat3<T> m, Vec3<T> b) {
  detail::eliminate(m, b, [](Vec3<T>& v, int r, int p, const T& f, bool swap, bool subtract = false) {
    if (swap)
      std::swap(v[r], v[p]);
    else if (subtract)
      v[r] -= f * v[p];
    else
      v[r] *= f;
  });
  return b;
}

template <Scalar T>
Mat3<T> inverse(Mat3<T> m) {
  Mat3<T> inv = Mat3<T>::identity();
  detail::eliminate(m, inv, [](Mat3<T>& x, int r, int p, const T& f, bool swap, bool subtract = false) {
    for (int j = 0; j < 3; ++j) {
      if (swap)
        std::swap(x(r, j), x(p, j));
      else if (subtract)
        x(r, j) -= f * x(p, j);
      else
        x(r, j) *= f;
    }
  });
  return inv;
}

template <Scalar T>
Vec3<double> to_double(const Vec3<T>& v) {
  return {to_double(v[0]), to_double(v[1]), to_double(v[2])};
}

template <Scalar T>
Mat3<double> to_double(const Mat3<T>& m) {
  Mat3<double> r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = to_double(m.a[k]);
  return r;
}

template <Scalar T>
Mat3<T> convert_matrix(const Mat3<double>& m) {
  Mat3<T> r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = T(m.a[k]);
  return r;
}

}  // namespace lieharm
