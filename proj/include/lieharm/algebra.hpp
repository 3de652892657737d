#pragma once

#include "lieharm/linalg.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace lieharm {

/// The five non-abelian unimodular 3D Lie algebras.
enum class AlgebraId { Nil, E02, Sol, Su2, Sl2 };

std::string_view to_string(AlgebraId id);
AlgebraId parse_algebra_id(std::string_view name);  // throws UnknownId
const std::vector<AlgebraId>& all_algebras();

/// A 3D Lie algebra given by dense structure constants in the basis
/// (X1, X2, X3):  [X_i, X_j] = sum_k c(i,j,k) X_k.
template <Scalar T>
class LieAlgebra {
 public:
  LieAlgebra(AlgebraId id, const std::array<int, 27>& constants) : id_(id) {
    for (std::size_t k = 0; k < 27; ++k) c_[k] = T(constants[k]);
  }

  AlgebraId id() const { return id_; }

  const T& c(int i, int j, int k) const { return c_[static_cast<std::size_t>(9 * i + 3 * j + k)]; }

  Vec3<T> bracket(const Vec3<T>& u, const Vec3<T>& v) const {
    Vec3<T> r;
    for (int i = 0; i < 3; ++i) {
      if (is_zero(u[i])) continue;
      for (int j = 0; j < 3; ++j) {
        if (is_zero(v[j])) continue;
        const T uv = u[i] * v[j];
        for (int k = 0; k < 3; ++k)
          if (!is_zero(c(i, j, k))) r[k] += uv * c(i, j, k);
      }
    }
    return r;
  }

  /// Matrix of v -> [u, v].
  Mat3<T> ad(const Vec3<T>& u) const {
    return Mat3<T>::from_columns(bracket(u, Vec3<T>::basis(0)), bracket(u, Vec3<T>::basis(1)),
                                 bracket(u, Vec3<T>::basis(2)));
  }

  /// Max |c(i,j,k) + c(j,i,k)|.
  double antisymmetry_residual() const {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r = std::max(r, abs_value(T(c(i, j, k) + c(j, i, k))));
    return r;
  }

  /// Max abs entry of [[u,v],w] + [[v,w],u] + [[w,u],v].
  double jacobi_residual(const Vec3<T>& u, const Vec3<T>& v, const Vec3<T>& w) const {
    const Vec3<T> j = bracket(bracket(u, v), w) + bracket(bracket(v, w), u) + bracket(bracket(w, u), v);
    return j.max_abs();
  }

  /// Max over i of |tr(ad_{X_i})|.
  double unimodularity_residual() const {
    double r = 0.0;
    for (int i = 0; i < 3; ++i) r = std::max(r, abs_value(ad(Vec3<T>::basis(i)).trace()));
    return r;
  }

 private:
  AlgebraId id_;
  std::array<T, 27> c_;
};

/// Integer structure constants of a catalog algebra.
std::array<int, 27> structure_constants(AlgebraId id);

template <Scalar T>
LieAlgebra<T> catalog(AlgebraId id) {
  return LieAlgebra<T>(id, structure_constants(id));
}

}  // namespace lieharm
