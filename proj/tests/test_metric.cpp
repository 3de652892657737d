#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieharm/algebra.hpp"
#include "lieharm/metric.hpp"
#include "lieharm/random.hpp"

using namespace lieharm;
using Q = Rational;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

Vec3<Q> rand_vec(Rng& rng) { return {rng.rational(-5, 5), rng.rational(-5, 5), rng.rational(-5, 5)}; }

// sum_i w_i f_i f_i^T, which must equal G^{-1} for any weighted frame
template <Scalar T>
Mat3<T> frame_sum(const WeightedFrame<T>& f) {
  Mat3<T> s;
  for (std::size_t i = 0; i < 3; ++i)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) s(r, c) += f.weights[i] * f.vectors[i][r] * f.vectors[i][c];
  return s;
}

}  // namespace

TEST_CASE("orthonormal frames") {
  CHECK(orthonormal_frame(Metric<Q>(Mat3<Q>::identity())) == Mat3<Q>::identity());
  CHECK(orthonormal_frame(Metric<Q>(Mat3<Q>::diag(4, 1, 1))) == Mat3<Q>::diag(Q(1, 2), 1, 1));

  const Metric<double> sol(Mat3<double>::rows({1, 1, 0, 1, 2, 0, 0, 0, 1}));
  const Mat3<double> e = orthonormal_frame(sol);
  CHECK((e.transpose() * sol.gram() * e - Mat3<double>::identity()).max_abs() < 1e-12);

  // The rational path keeps an exact orthogonal frame even for the sol family.
  const Metric<Q> exact(Mat3<Q>::rows({1, 1, 0, 1, 3, 0, 0, 0, 2}));
  CHECK(frame_sum(exact.frame()) == exact.gram_inverse());
  CHECK(exact.frame().construction == "ldl-orthogonal");
  CHECK(kind_of([&] { orthonormal_frame(exact); }) == ErrorKind::NotRational);
}

TEST_CASE("degenerate Gram matrices are rejected") {
  CHECK(kind_of([] { Metric<Q>(Mat3<Q>::rows({1, 2, 0, 2, 1, 0, 0, 0, 1})); }) == ErrorKind::DegenerateMetric);
  CHECK(kind_of([] { Metric<Q>(Mat3<Q>::rows({1, 1, 0, 0, 1, 0, 0, 0, 1})); }) == ErrorKind::DegenerateMetric);
  CHECK(kind_of([] { Metric<double>(Mat3<double>::diag(1, 0, 1)); }) == ErrorKind::DegenerateMetric);
}

TEST_CASE("adjoint map identities") {
  Rng rng(derive_seed(3, "adjoint"));
  const Metric<Q> id(Mat3<Q>::identity());
  Mat3<Q> l;
  for (auto& x : l.a) x = rng.rational(-5, 5);
  CHECK(adjoint_map(id, id, l) == l.transpose());

  const Metric<Q> g(Mat3<Q>::diag(2, Q(1, 3), 5));
  CHECK(adjoint_map(g, g, Mat3<Q>::identity()) == Mat3<Q>::identity());
  const auto ad3 = catalog<Q>(AlgebraId::E02).ad(Vec3<Q>::basis(2));
  const Mat3<Q> star = adjoint_map(g, g, ad3);
  CHECK(star == g.gram_inverse() * ad3.transpose() * g.gram());

  const Metric<Q> g1(Mat3<Q>::rows({1, 1, 0, 1, 4, 0, 0, 0, 3})), g2(Mat3<Q>::diag(Q(1, 2), 2, 7));
  const Mat3<Q> s = adjoint_map(g1, g2, l);
  CHECK(adjoint_map(g2, g1, s) == l);
  for (int n = 0; n < 1000; ++n) {
    const auto u = rand_vec(rng), v = rand_vec(rng);
    REQUIRE(g1.inner(s * u, v) == g2.inner(u, l * v));
  }
}

TEST_CASE("metric families") {
  CHECK(metric_family<Q>("nil", ParamSet<Q>{{"lambda", Q(2)}}).gram() == Mat3<Q>::diag(2, 2, 1));
  CHECK(metric_family<Q>("sol", ParamSet<Q>{{"mu", Q(3)}, {"nu", Q(1)}}).gram() ==
        Mat3<Q>::rows({1, 1, 0, 1, 3, 0, 0, 0, 1}));
  CHECK(metric_family<Q>("su2", ParamSet<Q>{{"lambda", Q(1)}, {"mu", Q(1)}, {"nu", Q(1)}}).gram() ==
        Mat3<Q>::identity());
  CHECK(metric_family<Q>("e02", ParamSet<Q>{{"mu1", Q(1, 2)}, {"nu1", Q(3)}}, "1").gram() == Mat3<Q>::diag(1, Q(1, 2), 3));

  CHECK(kind_of([] { metric_family<Q>("nil", ParamSet<Q>{{"lambda", Q(0)}}); }) == ErrorKind::ParamOutOfRange);
  CHECK(kind_of([] { metric_family<Q>("e02", ParamSet<Q>{{"mu", Q(2)}, {"nu", Q(1)}}); }) == ErrorKind::ParamOutOfRange);
  CHECK(kind_of([] { metric_family<Q>("sol", ParamSet<Q>{{"mu", Q(1)}, {"nu", Q(1)}}); }) == ErrorKind::ParamOutOfRange);
  CHECK(kind_of([] {
          metric_family<Q>("su2", ParamSet<Q>{{"lambda", Q(1)}, {"mu", Q(2)}, {"nu", Q(1)}});
        }) == ErrorKind::ParamOutOfRange);
  CHECK(kind_of([] {
          metric_family<Q>("sl2", ParamSet<Q>{{"lambda", Q(3)}, {"mu", Q(2)}, {"nu", Q(1)}});
        }) == ErrorKind::ParamOutOfRange);
  CHECK(kind_of([] { metric_family<Q>("hyperbolic", ParamSet<Q>{}); }) == ErrorKind::UnknownId);
}

TEST_CASE("random family metrics are positive definite with exact frames") {
  Rng rng(derive_seed(4, "families"));
  for (int n = 0; n < 200; ++n) {
    std::vector<Metric<Q>> ms;
    Draw<Q> d{rng};
    const Q x = d.uniform(0.1, 5), y = d.uniform(0.1, 5), z = d.uniform(0.1, 5);
    const Q lo = std::min({x, y, z}), hi = std::max({x, y, z}), mid = x + y + z - lo - hi;
    ms.push_back(metric_family<Q>("nil", ParamSet<Q>{{"lambda", x}}));
    ms.push_back(metric_family<Q>("e02", ParamSet<Q>{{"mu", d.uniform(0.1, 1)}, {"nu", y}}));
    ms.push_back(metric_family<Q>("sol", ParamSet<Q>{{"mu", d.uniform(1.1, 10)}, {"nu", y}}));
    ms.push_back(metric_family<Q>("sol-diag", ParamSet<Q>{{"nu", z}}));
    ms.push_back(metric_family<Q>("su2", ParamSet<Q>{{"lambda", hi}, {"mu", mid}, {"nu", lo}}));
    ms.push_back(metric_family<Q>("sl2", ParamSet<Q>{{"lambda", lo}, {"mu", hi}, {"nu", mid}}));
    for (const auto& m : ms) {
      REQUIRE(m.gram().det() > 0);
      REQUIRE(frame_sum(m.frame()) == m.gram_inverse());
      REQUIRE(m.gram() * m.gram_inverse() == Mat3<Q>::identity());
    }
  }
}
