#pragma once

// Printed closed forms for tension, bitension and test matrices, evaluated
// directly from the parameters and compared with the engine.

#include "lieharm/random.hpp"
#include "lieharm/tension.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace closed_forms {

using namespace lieharm;

enum class Quantity { Tau, Tau2, TestMatrix, Det };

template <Scalar T>
struct Expectation {
  Problem<T> problem;
  std::vector<T> value;
};

struct AuditResult {
  std::string name;
  bool exact = true;
  std::size_t draws = 0;
  std::size_t mismatches = 0;
  double max_residual = 0;  // relative, float formulas only
};

struct Formula {
  std::string name;
  std::function<AuditResult(std::size_t n, std::uint64_t seed)> run;
};

inline constexpr double kFloatTol = 1e-9;

template <Scalar T>
std::vector<T> engine_value(const Problem<T>& p, Quantity q) {
  switch (q) {
    case Quantity::Tau: {
      const auto v = tau(p);
      return {v.c.begin(), v.c.end()};
    }
    case Quantity::Tau2: {
      const auto v = tau2(p);
      return {v.c.begin(), v.c.end()};
    }
    case Quantity::TestMatrix: {
      const auto m = test_matrix(p);
      return {m.a.begin(), m.a.end()};
    }
    case Quantity::Det: return {test_matrix(p).det()};
  }
  return {};
}

template <Scalar T, class Make>
Formula formula(std::string name, Quantity q, Make make) {
  return {name, [name, q, make](std::size_t n, std::uint64_t seed) {
            AuditResult r{name, is_exact_v<T>};
            for (std::size_t i = 0; i < n; ++i) {
              Rng rng(derive_seed(seed, name, i));
              Draw<T> d{rng};
              const Expectation<T> e = make(d);
              const std::vector<T> got = engine_value(e.problem, q);
              ++r.draws;
              if constexpr (is_exact_v<T>) {
                if (got != e.value) ++r.mismatches;
              } else {
                double ref = 1.0, diff = 0.0;
                for (std::size_t k = 0; k < got.size(); ++k) {
                  ref = std::max(ref, std::fabs(e.value[k]));
                  diff = std::max(diff, std::fabs(got[k] - e.value[k]));
                }
                r.max_residual = std::max(r.max_residual, diff / ref);
                if (!(diff / ref < kFloatTol)) ++r.mismatches;
              }
            }
            return r;
          }};
}

template <Scalar T>
Mat3<T> m3(T a, T b, T c, T d, T e, T f, T g, T h, T i) {
  return Mat3<T>::rows({a, b, c, d, e, f, g, h, i});
}

template <Scalar T>
Mat3<T> dg(T a, T b, T c) {
  return Mat3<T>::diag(a, b, c);
}

template <Scalar T>
std::vector<T> vec(T a, T b, T c) {
  return {a, b, c};
}

template <Scalar T>
std::vector<T> mat(const Mat3<T>& m) {
  return {m.a.begin(), m.a.end()};
}

template <Scalar T>
Problem<T> problem(AlgebraId id, const Mat3<T>& g1, const Mat3<T>& g2, const Mat3<T>& xi) {
  return Problem<T>(id, Metric<T>(g1), Metric<T>(g2), xi);
}

// ------------------------------------------------------------------ nil

inline void add_nil(std::vector<Formula>& out) {
  using T = Rational;
  out.push_back(formula<T>("nil.tau", Quantity::Tau, [](Draw<T>& d) {
    const T a1 = d.uniform(-5, 5), a2 = d.uniform(-5, 5), a3 = d.uniform(-5, 5);
    const T b1 = d.uniform(-5, 5), b2 = d.uniform(-5, 5), b3 = d.uniform(-5, 5);
    const T l1 = d.uniform(0.1, 10), l2 = d.uniform(0.1, 10);
    const auto xi = m3<T>(a1, a2, 0, b1, b2, 0, a3, b3, a1 * b2 - a2 * b1);
    return Expectation<T>{problem(AlgebraId::Nil, dg<T>(l1, l1, 1), dg<T>(l2, l2, 1), xi),
                          vec<T>((a3 * b1 + b3 * b2) / (l2 * l1), -(a3 * a1 + b3 * a2) / (l2 * l1), 0)};
  }));
}

// ------------------------------------------------------------------ e02

template <Scalar T>
struct E02 {
  T a, b, g, al, be, m1, m2, n1, n2;
  explicit E02(Draw<T>& d)
      : a(d.uniform(-5, 5)),
        b(d.uniform(-5, 5)),
        g(d.uniform(-5, 5)),
        al(d.uniform(-5, 5)),
        be(d.uniform(-5, 5)),
        m1(d.uniform(0.1, 1)),
        m2(d.uniform(0.1, 1)),
        n1(d.uniform(0.1, 10)),
        n2(d.uniform(0.1, 10)) {
    while (g * g == T(1)) g = d.uniform(-5, 5);
  }
  Mat3<T> g1() const { return dg<T>(1, m1, n1); }
  Mat3<T> g2() const { return dg<T>(1, m2, n2); }
  Mat3<T> xi1() const { return m3<T>(0, 0, a, 0, 0, b, 0, 0, g); }
  Mat3<T> xi2() const { return m3<T>(al, -be, a, be, al, b, 0, 0, 1); }
  Mat3<T> xi3() const { return m3<T>(al, be, a, be, -al, b, 0, 0, -1); }
  Problem<T> p(const Mat3<T>& xi) const { return problem(AlgebraId::E02, g1(), g2(), xi); }
};

inline void add_e02(std::vector<Formula>& out) {
  using T = Rational;
  out.push_back(formula<T>("e02.xi1.tau", Quantity::Tau, [](Draw<T>& d) {
    const E02<T> e(d);
    const auto& [a, b, g, al, be, m1, m2, n1, n2] = e;
    return Expectation<T>{e.p(e.xi1()), vec<T>(-g * m2 * b / n1, g * a / (m2 * n1), b * a * (m2 - 1) / (n2 * n1))};
  }));
  out.push_back(formula<T>("e02.xi1.tau2", Quantity::Tau2, [](Draw<T>& d) {
    const E02<T> e(d);
    const auto& [a, b, g, al, be, m1, m2, n1, n2] = e;
    const T g2 = g * g, a2 = a * a, b2 = b * b;
    return Expectation<T>{
        e.p(e.xi1()),
        vec<T>(-(b * g * ((g2 * n2 + a2) * m2 * m2 - 2 * a2 * m2 + a2)) / (n1 * n1 * n2),
               g * a * (b2 * m2 * (m2 - 1) * (m2 - 1) + g2 * n2) / (n1 * n1 * m2 * m2 * n2),
               (((g2 * n2 + a2 - b2) * m2 * m2 + (g2 * n2 - a2 + b2) * m2 + g2 * n2) * b * (m2 - 1) * a) /
                   (n1 * n1 * n2 * n2 * m2))};
  }));
  out.push_back(formula<T>("e02.xi1.tau2.gamma0", Quantity::Tau2, [](Draw<T>& d) {
    E02<T> e(d);
    e.g = 0;
    const auto& [a, b, g, al, be, m1, m2, n1, n2] = e;
    return Expectation<T>{e.p(e.xi1()),
                          vec<T>(0, 0, (a - b) * (a + b) * (m2 - 1) * (m2 - 1) * b * a / (n1 * n1 * n2 * n2))};
  }));
  out.push_back(formula<T>("e02.xi2.tau", Quantity::Tau, [](Draw<T>& d) {
    const E02<T> e(d);
    const auto& [a, b, g, al, be, m1, m2, n1, n2] = e;
    return Expectation<T>{e.p(e.xi2()), vec<T>(-m2 * b / n1, a / (m2 * n1),
                                               (m2 - 1) * (al * be * n1 * (m1 - 1) + a * b * m1) / (m1 * n1 * n2))};
  }));
  out.push_back(formula<T>("e02.xi2.tau2", Quantity::Tau2, [](Draw<T>& d) {
    const E02<T> e(d);
    const auto& [a, b, g, al, be, m1, m2, n1, n2] = e;
    const T q = (m2 - 1) * (m2 - 1);
    const T A1 = -(b * m1 * q * a * a + be * al * n1 * q * (m1 - 1) * a + b * m1 * m2 * m2 * n2) / (m1 * n1 * n1 * n2);
    const T P = al * n1 * (m1 - 1) * be + a * b * m1;
    const T A2 = (P * b * m2 * m2 * m2 - 2 * P * b * m2 * m2 + P * b * m2 + a * m1 * n2) / (n1 * n1 * m2 * m2 * n2 * m1);
    const T A3n =
        m2 * be * n1 * n1 * (m1 - 1) * (m1 - 1) * q * al * al * al + m2 * n1 * a * b * m1 * q * (m1 - 1) * al * al +
        m2 * be * n1 * (m1 - 1) * (-be * be * m1 * n1 + a * a * m1 - b * b * m1 + be * be * n1) * q * al +
        a * b * m1 *
            (-be * be * m1 * m2 * m2 * n1 + m1 * m2 * m2 * n2 + a * a * m1 * m2 * m2 - b * b * m1 * m2 * m2 +
             be * be * m1 * m2 * n1 + be * be * m2 * m2 * n1 + m1 * m2 * n2 - a * a * m1 * m2 + b * b * m1 * m2 -
             be * be * m2 * n1 + m1 * n2) *
            (m2 - 1);
    return Expectation<T>{e.p(e.xi2()), vec<T>(A1, A2, A3n / (m1 * m1 * n1 * n1 * n2 * n2 * m2))};
  }));
  out.push_back(formula<T>("e02.xi2.test_matrix", Quantity::TestMatrix, [](Draw<T>& d) {
    const E02<T> e(d);
    const auto& [a, b, g, al, be, m1, m2, n1, n2] = e;
    const T m33 = (m2 - 1) * (((al * al - be * be) * n1 + a * a - b * b) * m1 + n1 * (-al * al + be * be)) / (m1 * n1);
    return Expectation<T>{e.p(e.xi2()), mat(m3<T>(m2 / n1, 0, -a * (m2 - 1) / n1, 0, 1 / n1, b * (m2 - 1) / n1,
                                                  -m2 * a / n1, -b / n1, m33))};
  }));
  out.push_back(formula<T>("e02.xi2.det", Quantity::Det, [](Draw<T>& d) {
    const E02<T> e(d);
    const auto& [a, b, g, al, be, m1, m2, n1, n2] = e;
    return Expectation<T>{e.p(e.xi2()), {m2 * (m2 - 1) * (al * al - be * be) * (m1 - 1) / (n1 * n1 * m1)}};
  }));
  out.push_back(formula<T>("e02.xi3.tau", Quantity::Tau, [](Draw<T>& d) {
    const E02<T> e(d);
    const auto& [a, b, g, al, be, m1, m2, n1, n2] = e;
    return Expectation<T>{e.p(e.xi3()), vec<T>(m2 * b / n1, -a / (m2 * n1),
                                               (m2 - 1) * (al * be * n1 * (m1 - 1) + a * b * m1) / (m1 * n1 * n2))};
  }));
}

// ------------------------------------------------------------------ sol

template <Scalar T>
struct Sol {
  T a, b, g, al, be, m1, m2, n1, n2;
  bool nd1, nd2;
  Sol(Draw<T>& d, bool nondiag1, bool nondiag2)
      : a(d.uniform(-5, 5)),
        b(d.uniform(-5, 5)),
        g(d.uniform(-5, 5)),
        al(d.uniform(-5, 5)),
        be(d.uniform(-5, 5)),
        m1(d.uniform(1.1, 10)),
        m2(d.uniform(1.1, 10)),
        n1(d.uniform(0.1, 10)),
        n2(d.uniform(0.1, 10)),
        nd1(nondiag1),
        nd2(nondiag2) {
    while (g * g == T(1)) g = d.uniform(-5, 5);
  }
  static Mat3<T> gram(bool nd, T m, T n) { return nd ? m3<T>(1, 1, 0, 1, m, 0, 0, 0, n) : dg<T>(1, 1, n); }
  Mat3<T> xi(int k) const {
    if (k == 1) return m3<T>(0, 0, a, 0, 0, b, 0, 0, g);
    if (k == 2) return m3<T>(al, 0, a, 0, be, b, 0, 0, 1);
    return m3<T>(0, be, a, al, 0, b, 0, 0, -1);
  }
  Problem<T> p(int k) const { return problem(AlgebraId::Sol, gram(nd1, m1, n1), gram(nd2, m2, n2), xi(k)); }
};

struct Pairing {
  const char* key;
  bool nd1, nd2;
};
inline constexpr Pairing kPairings[] = {{"dd", false, false}, {"dn", false, true}, {"nd", true, false}, {"nn", true, true}};

template <Scalar T>
std::vector<T> sol_tau(const Sol<T>& s, const std::string& key, int k) {
  const auto& [a, b, g, al, be, m1, m2, n1, n2, nd1_, nd2_] = s;
  const T al2 = al * al, be2 = be * be, a2 = a * a, b2 = b * b;
  if (key == "dd" || (key == "nd" && k == 1)) {
    if (k == 1) return vec<T>(-g * a / n1, g * b / n1, (a2 - b2) / (n2 * n1));
    if (k == 2) return vec<T>(-a / n1, b / n1, ((al2 - be2) * n1 + a2 - b2) / (n2 * n1));
    return vec<T>(a / n1, -b / n1, ((-al2 + be2) * n1 + a2 - b2) / (n2 * n1));
  }
  if (key == "dn" || (key == "nn" && k == 1)) {
    const T x1 = -((a + 2 * b) * m2 + a) / ((m2 - 1) * n1), x2 = (b * m2 + 2 * a + b) / ((m2 - 1) * n1);
    if (k == 1) return vec<T>(g * x1, g * x2, (-b2 * m2 + a2) / (n2 * n1));
    if (k == 2) return vec<T>(x1, x2, ((-be2 * m2 + al2) * n1 - b2 * m2 + a2) / (n2 * n1));
    return vec<T>(-x1, -x2, ((-al2 * m2 + be2) * n1 - b2 * m2 + a2) / (n2 * n1));
  }
  if (key == "nd") {
    if (k == 2)
      return vec<T>(-a / n1, b / n1, ((al2 * n1 + a2 - b2) * m1 - be2 * n1 - a2 + b2) / (n2 * (m1 - 1) * n1));
    return vec<T>(a / n1, -b / n1, ((-al2 * n1 + a2 - b2) * m1 + be2 * n1 - a2 + b2) / (n2 * (m1 - 1) * n1));
  }
  const T x1 = -((a + 2 * b) * m2 + a) / ((m2 - 1) * n1), x2 = (b * m2 + 2 * a + b) / ((m2 - 1) * n1);
  if (k == 2)
    return vec<T>(x1, x2, ((al2 * n1 - b2 * m2 + a2) * m1 + (-be2 * n1 + b2) * m2 - a2) / (n2 * (m1 - 1) * n1));
  return vec<T>(-x1, -x2, (((-al2 * n1 - b2) * m2 + a2) * m1 + b2 * m2 + be2 * n1 - a2) / (n2 * (m1 - 1) * n1));
}

template <Scalar T>
std::vector<T> sol_tau2_xi1_diag(const Sol<T>& s) {
  const auto& [a, b, g, al, be, m1, m2, n1, n2, nd1_, nd2_] = s;
  const T h = T(1) / 2, g2 = g * g, a2 = a * a, b2 = b * b;
  return vec<T>(-2 * (h * g2 * n2 + a2 - b2) * a * g / (n1 * n1 * n2), -2 * (-h * g2 * n2 + a2 - b2) * g * b / (n1 * n1 * n2),
                (g2 * (a2 - b2) * n2 + 2 * a2 * a2 - 2 * b2 * b2) / (n2 * n2 * n1 * n1));
}

template <Scalar T>
std::vector<T> sol_tau2_xi1_nondiag(const Sol<T>& s) {
  const auto& [a, b, g, al, be, m1, m2, n1, n2, nd1_, nd2_] = s;
  const T h = T(1) / 2, g2 = g * g, a2 = a * a, b2 = b * b, q = (m2 - 1) * (m2 - 1);
  const T x = -2 *
              (-b2 * (a - b) * m2 * m2 * m2 + (a2 * a - a2 * b + (h * g2 * n2 + b2) * a + 2 * b * g2 * n2 - b2 * b) * m2 * m2 +
               (3 * a * g2 * n2 + 2 * b * g2 * n2 - a2 * a + a2 * b) * m2 + h * a * g2 * n2) *
              g / (n1 * n1 * n2 * q);
  const T y = 2 * g *
              (b2 * b * m2 * m2 * m2 - b * (-h * g2 * n2 + a2 + a * b + b2) * m2 * m2 +
               (a * b2 + (3 * g2 * n2 + a2) * b + 2 * a * g2 * n2 + a2 * a) * m2 + 2 * a * g2 * n2 + h * b * g2 * n2 - a2 * a) /
              (n1 * n1 * n2 * q);
  const T z = 2 * (-b2 * m2 + a2) * (b2 * m2 * m2 + (h * g2 * n2 + a2 - b2) * m2 + 3 * h * g2 * n2 - a2) /
              (n1 * n1 * n2 * n2 * (m2 - 1));
  return vec<T>(x, y, z);
}

template <Scalar T>
std::pair<Mat3<T>, T> sol_test_matrix(const Sol<T>& s, const std::string& key, int k) {
  const auto& [a, b, g, al, be, m1, m2, n1, n2, nd1_, nd2_] = s;
  const T al2 = al * al, be2 = be * be, a2 = a * a, b2 = b * b;
  const T sg = k == 2 ? T(-1) : T(1);  // xi2 and xi3 differ by the sign of the a, b entries
  if (key == "dd")
    return {m3<T>(1 / n1, 0, sg * 2 * a / n1, 0, 1 / n1, sg * 2 * b / n1, sg * a / n1, sg * b / n1,
                  (2 * al2 * n1 + 2 * be2 * n1 + 2 * a2 + 2 * b2) / n1),
            2 * (al2 + be2) / (n1 * n1)};
  if (key == "dn") {
    const T m33 = k == 2 ? (2 * n1 * be2 * m2 + 2 * al2 * n1 + 2 * b2 * m2 + 2 * a2) / n1
                         : (2 * al2 * m2 * n1 + 2 * b2 * m2 + 2 * be2 * n1 + 2 * a2) / n1;
    const T det = k == 2 ? 2 * (m2 - 1) * (be2 * m2 + al2) / (n1 * n1) : 2 * (m2 - 1) * (al2 * m2 + be2) / (n1 * n1);
    return {m3<T>(1 / n1, -1 / n1, sg * 2 * a / n1, -1 / n1, m2 / n1, sg * 2 * b * m2 / n1, sg * (a - b) / n1,
                  sg * (b * m2 - a) / n1, m33),
            det};
  }
  if (key == "nd")
    return {m3<T>(1 / n1, 0, sg * 2 * a / n1, 0, 1 / n1, sg * 2 * b / n1, sg * a / n1, sg * b / n1,
                  ((2 * al2 * n1 + 2 * a2 + 2 * b2) * m1 + 2 * be2 * n1 - 2 * a2 - 2 * b2) / ((m1 - 1) * n1)),
            2 * (al2 * m1 + be2) / (n1 * n1 * (m1 - 1))};
  const T m33 = k == 2 ? ((2 * al2 * n1 + 2 * b2 * m2 + 2 * a2) * m1 + (2 * be2 * n1 - 2 * b2) * m2 - 2 * a2) / (n1 * (m1 - 1))
                       : (((2 * al2 * n1 + 2 * b2) * m2 + 2 * a2) * m1 - 2 * b2 * m2 + 2 * be2 * n1 - 2 * a2) / (n1 * (m1 - 1));
  const T det = k == 2 ? 2 * (m2 - 1) * (al2 * m1 + be2 * m2) / (n1 * n1 * (m1 - 1))
                       : 2 * (m2 - 1) * (al2 * m1 * m2 + be2) / (n1 * n1 * (m1 - 1));
  return {m3<T>(1 / n1, -1 / n1, sg * 2 * a / n1, -1 / n1, m2 / n1, sg * 2 * m2 * b / n1, sg * (a - b) / n1,
                sg * (m2 * b - a) / n1, m33),
          det};
}

inline void add_sol(std::vector<Formula>& out) {
  using T = Rational;
  for (const Pairing& pr : kPairings) {
    const std::string key = pr.key;
    for (int k = 1; k <= 3; ++k) {
      const std::string base = "sol." + key + ".xi" + std::to_string(k);
      out.push_back(formula<T>(base + ".tau", Quantity::Tau, [pr, key, k](Draw<T>& d) {
        const Sol<T> s(d, pr.nd1, pr.nd2);
        return Expectation<T>{s.p(k), sol_tau(s, key, k)};
      }));
      if (k == 1) {
        out.push_back(formula<T>(base + ".tau2", Quantity::Tau2, [pr](Draw<T>& d) {
          const Sol<T> s(d, pr.nd1, pr.nd2);
          return Expectation<T>{s.p(1), pr.nd2 ? sol_tau2_xi1_nondiag(s) : sol_tau2_xi1_diag(s)};
        }));
      } else {
        out.push_back(formula<T>(base + ".test_matrix", Quantity::TestMatrix, [pr, key, k](Draw<T>& d) {
          const Sol<T> s(d, pr.nd1, pr.nd2);
          return Expectation<T>{s.p(k), mat(sol_test_matrix(s, key, k).first)};
        }));
        out.push_back(formula<T>(base + ".det", Quantity::Det, [pr, key, k](Draw<T>& d) {
          const Sol<T> s(d, pr.nd1, pr.nd2);
          return Expectation<T>{s.p(k), {sol_test_matrix(s, key, k).second}};
        }));
      }
    }
  }
  out.push_back(formula<T>("sol.dd.xi2.tau2", Quantity::Tau2, [](Draw<T>& d) {
    const Sol<T> s(d, false, false);
    const auto& [a, b, g, al, be, m1, m2, n1, n2, nd1_, nd2_] = s;
    const T h = T(1) / 2, al2 = al * al, be2 = be * be, a2 = a * a, b2 = b * b;
    return Expectation<T>{
        s.p(2), vec<T>(-2 * a * ((al2 - be2) * n1 + a2 - b2 + h * n2) / (n1 * n1 * n2),
                       -2 * ((al2 - be2) * n1 + a2 - b2 - h * n2) * b / (n1 * n1 * n2),
                       (2 * al2 * al2 * n1 * n1 - 2 * be2 * be2 * n1 * n1 + 4 * a2 * al2 * n1 - 4 * b2 * be2 * n1 +
                        2 * a2 * a2 - 2 * b2 * b2 + a2 * n2 - b2 * n2) /
                           (n1 * n1 * n2 * n2))};
  }));
  out.push_back(formula<T>("sol.dd.xi3.tau2", Quantity::Tau2, [](Draw<T>& d) {
    const Sol<T> s(d, false, false);
    const auto& [a, b, g, al, be, m1, m2, n1, n2, nd1_, nd2_] = s;
    const T al2 = al * al, be2 = be * be, a2 = a * a, b2 = b * b;
    return Expectation<T>{
        s.p(3), vec<T>(a * (-2 * al2 * n1 + 2 * be2 * n1 + 2 * a2 - 2 * b2 + n2) / (n1 * n1 * n2),
                       b * (-2 * al2 * n1 + 2 * be2 * n1 + 2 * a2 - 2 * b2 - n2) / (n1 * n1 * n2),
                       (-2 * al2 * al2 * n1 * n1 + 2 * be2 * be2 * n1 * n1 + 4 * a2 * be2 * n1 - 4 * al2 * b2 * n1 +
                        2 * a2 * a2 - 2 * b2 * b2 + a2 * n2 - b2 * n2) /
                           (n1 * n1 * n2 * n2))};
  }));
  // mu2 = a^2/b^2 on a non-diagonal target.
  out.push_back(formula<T>("sol.dn.xi1.tau2.mu2-eq-a2-over-b2", Quantity::Tau2, [](Draw<T>& d) {
    Sol<T> s(d, false, true);
    s.b = d.nonzero(-5, 5);
    s.a = s.b * d.uniform(1.1, 3) * T(d.sign());
    s.m2 = s.a * s.a / (s.b * s.b);
    const auto& [a, b, g, al, be, m1, m2, n1, n2, nd1_, nd2_] = s;
    const T c = (a + b) * (a + b) * g * g * g / ((a - b) * (a - b) * n1 * n1);
    return Expectation<T>{s.p(1), vec<T>(-c * a, b * c, 0)};
  }));
}

// ------------------------------------------------------------------ su(2), sl(2,R)

inline Mat3<double> rot_yz(double t) { return m3(1.0, 0.0, 0.0, 0.0, std::cos(t), std::sin(t), 0.0, -std::sin(t), std::cos(t)); }
inline Mat3<double> rot_xz(double t) { return m3(std::cos(t), 0.0, std::sin(t), 0.0, 1.0, 0.0, -std::sin(t), 0.0, std::cos(t)); }
inline Mat3<double> rot_xy(double t) { return m3(std::cos(t), std::sin(t), 0.0, -std::sin(t), std::cos(t), 0.0, 0.0, 0.0, 1.0); }
inline Mat3<double> boost_yz(double t) {
  return m3(1.0, 0.0, 0.0, 0.0, std::cosh(t), std::sinh(t), 0.0, std::sinh(t), std::cosh(t));
}
inline Mat3<double> boost_xz(double t) {
  return m3(std::cosh(t), 0.0, std::sinh(t), 0.0, 1.0, 0.0, std::sinh(t), 0.0, std::cosh(t));
}

struct Diag6 {
  double l1, m1, n1, l2, m2, n2;
  // su2 needs nu <= mu <= lambda, sl2 lambda <= mu; the formulas hold for any
  // positive diagonal, so plain draws are used.
  explicit Diag6(Draw<double>& d)
      : l1(d.real(0.3, 3)), m1(d.real(0.3, 3)), n1(d.real(0.3, 3)), l2(d.real(0.3, 3)), m2(d.real(0.3, 3)), n2(d.real(0.3, 3)) {}
  Mat3<double> g1() const { return dg(l1, m1, n1); }
  Mat3<double> g2() const { return dg(l2, m2, n2); }
};

inline void add_compact(std::vector<Formula>& out) {
  using T = double;
  using std::cos, std::sin, std::cosh, std::sinh;
  auto single = [&out](std::string name, AlgebraId id, std::function<Mat3<T>(double)> gen, double lo, double hi,
                       std::function<std::vector<T>(const Diag6&, double)> t1,
                       std::function<std::vector<T>(const Diag6&, double)> t2) {
    out.push_back(formula<T>(name + ".tau", Quantity::Tau, [=](Draw<T>& d) {
      const Diag6 m(d);
      const double a = d.real(lo, hi);
      return Expectation<T>{problem(id, m.g1(), m.g2(), gen(a)), t1(m, a)};
    }));
    out.push_back(formula<T>(name + ".tau2", Quantity::Tau2, [=](Draw<T>& d) {
      const Diag6 m(d);
      const double a = d.real(lo, hi);
      return Expectation<T>{problem(id, m.g1(), m.g2(), gen(a)), t2(m, a)};
    }));
  };
  single("su2.xi1", AlgebraId::Su2, rot_yz, -3.2, 3.2,
         [](const Diag6& m, double a) {
           return vec<T>(-sin(a) * cos(a) * (m.m2 - m.n2) * (m.m1 - m.n1) / (m.l2 * m.m1 * m.n1), 0, 0);
         },
         [](const Diag6& m, double a) {
           return vec<T>(-2 * std::pow(m.m2 - m.n2, 2) * std::pow(m.m1 - m.n1, 2) * cos(a) * (cos(a) * cos(a) - .5) *
                             sin(a) / (m.m1 * m.m1 * m.n1 * m.n1 * m.l2 * m.l2),
                         0, 0);
         });
  single("su2.xi2", AlgebraId::Su2, rot_xz, -3.2, 3.2,
         [](const Diag6& m, double a) {
           return vec<T>(0, sin(a) * cos(a) * (m.l2 - m.n2) * (m.l1 - m.n1) / (m.m2 * m.l1 * m.n1), 0);
         },
         [](const Diag6& m, double a) {
           return vec<T>(0,
                         (2 * cos(a) * cos(a) - 1) * cos(a) * std::pow(m.l2 - m.n2, 2) * std::pow(m.l1 - m.n1, 2) *
                             sin(a) / (m.l1 * m.l1 * m.n1 * m.n1 * m.m2 * m.m2),
                         0);
         });
  single("su2.xi3", AlgebraId::Su2, rot_xy, -3.2, 3.2,
         [](const Diag6& m, double a) {
           return vec<T>(0, 0, -cos(a) * sin(a) * (m.l2 - m.m2) * (m.l1 - m.m1) / (m.l1 * m.m1 * m.n2));
         },
         [](const Diag6& m, double a) {
           return vec<T>(0, 0,
                         -2 * cos(a) * sin(a) * (cos(a) * cos(a) - .5) * std::pow(m.m2 - m.l2, 2) *
                             std::pow(m.m1 - m.l1, 2) / (m.l1 * m.l1 * m.m1 * m.m1 * m.n2 * m.n2));
         });
  single("sl2.xi1", AlgebraId::Sl2, boost_yz, -2, 2,
         [](const Diag6& m, double a) {
           return vec<T>(-cosh(a) * sinh(a) * (m.m2 + m.n2) * (m.n1 + m.m1) / (m.l2 * m.m1 * m.n1), 0, 0);
         },
         [](const Diag6& m, double a) {
           return vec<T>(-2 * std::pow(m.m2 + m.n2, 2) * (cosh(a) * cosh(a) - .5) * std::pow(m.n1 + m.m1, 2) *
                             cosh(a) * sinh(a) / (m.m1 * m.m1 * m.n1 * m.n1 * m.l2 * m.l2),
                         0, 0);
         });
  single("sl2.xi2", AlgebraId::Sl2, boost_xz, -2, 2,
         [](const Diag6& m, double a) {
           return vec<T>(0, cosh(a) * sinh(a) * (m.l2 + m.n2) * (m.n1 + m.l1) / (m.m2 * m.l1 * m.n1), 0);
         },
         [](const Diag6& m, double a) {
           return vec<T>(0,
                         (2 * cosh(a) * cosh(a) - 1) * cosh(a) * std::pow(m.l2 + m.n2, 2) * std::pow(m.n1 + m.l1, 2) *
                             sinh(a) / (m.l1 * m.l1 * m.n1 * m.n1 * m.m2 * m.m2),
                         0);
         });
  single("sl2.xi3", AlgebraId::Sl2, rot_xy, -3.2, 3.2,
         [](const Diag6& m, double a) {
           return vec<T>(0, 0, -sin(a) * cos(a) * (m.l2 - m.m2) * (-m.m1 + m.l1) / (m.n2 * m.l1 * m.m1));
         },
         [](const Diag6& m, double a) {
           return vec<T>(0, 0,
                         -2 * sin(a) * cos(a) * std::pow(-m.l2 + m.m2, 2) * std::pow(m.m1 - m.l1, 2) *
                             (cos(a) * cos(a) - .5) / (m.l1 * m.l1 * m.m1 * m.m1 * m.n2 * m.n2));
         });

  out.push_back(formula<T>("su2.composite.tau", Quantity::Tau, [](Draw<T>& d) {
    const Diag6 m(d);
    const double a = d.real(-3.2, 3.2), b = d.real(-3.2, 3.2), c = d.real(-3.2, 3.2);
    const auto& [l1, m1, n1, l2, m2, n2] = m;
    const double R = sin(a) * sin(b) * l1 * (m1 - n1) * cos(c) * cos(c) - sin(c) * l1 * cos(a) * (m1 - n1) * cos(c) +
                     sin(a) * sin(b) * n1 * (l1 - m1);
    const double S = (sin(b) * (l1 * (m1 - n1) * cos(c) * cos(c) + n1 * (l1 - m1))) * cos(a) +
                     cos(c) * sin(a) * sin(c) * l1 * (m1 - n1);
    const double z = (l2 - m2) * (2 * cos(c) * sin(b) * sin(c) * l1 * (m1 - n1) * cos(a) * cos(a) +
                                  (l1 * (cos(b) * cos(b) - 2) * (m1 - n1) * cos(c) * cos(c) +
                                   n1 * (l1 - m1) * cos(b) * cos(b) + l1 * (m1 - n1)) *
                                      sin(a) * cos(a) -
                                  cos(c) * sin(b) * sin(c) * l1 * (m1 - n1));
    const double den = l1 * m1 * n1;
    const Mat3<T> xi = rot_xy(a) * rot_xz(b) * rot_yz(c);
    return Expectation<T>{problem(AlgebraId::Su2, m.g1(), m.g2(), xi),
                          vec<T>(cos(b) * (m2 - n2) * R / (l2 * den), (l2 - n2) * cos(b) * S / (m2 * den), -z / (n2 * den))};
  }));
  // The X3 coefficient carries (lambda2 - mu2); see the sl2 typo probe.
  out.push_back(formula<T>("sl2.composite.tau", Quantity::Tau, [](Draw<T>& d) {
    const Diag6 m(d);
    const double a = d.real(-3.2, 3.2), b = d.real(-1.5, 1.5), c = d.real(-1.5, 1.5);
    const auto& [l1, m1, n1, l2, m2, n2] = m;
    const double R = cosh(b) * (sinh(b) * l1 * sin(a) * (m1 + n1) * cosh(c) * cosh(c) -
                                sinh(c) * l1 * cos(a) * (m1 + n1) * cosh(c) - sinh(b) * n1 * sin(a) * (l1 - m1));
    const double S = cosh(b) * (sinh(b) * l1 * cos(a) * (m1 + n1) * cosh(c) * cosh(c) +
                                sinh(c) * l1 * sin(a) * (m1 + n1) * cosh(c) - sinh(b) * n1 * cos(a) * (l1 - m1));
    const double Q = -2 * cosh(c) * sinh(b) * sinh(c) * l1 * (m1 + n1) * cos(a) * cos(a) +
                     cosh(c) * sinh(b) * sinh(c) * l1 * (m1 + n1) +
                     sin(a) *
                         (l1 * (cosh(b) * cosh(b) - 2) * (m1 + n1) * cosh(c) * cosh(c) -
                          n1 * (l1 - m1) * cosh(b) * cosh(b) + l1 * (m1 + n1)) *
                         cos(a);
    const double den = l1 * m1 * n1;
    const Mat3<T> xi = rot_xy(a) * boost_xz(b) * boost_yz(c);
    return Expectation<T>{problem(AlgebraId::Sl2, m.g1(), m.g2(), xi),
                          vec<T>((m2 + n2) * R / (l2 * den), (l2 + n2) * S / (m2 * den), (l2 - m2) * Q / (n2 * den))};
  }));
}

inline std::vector<Formula> catalog() {
  std::vector<Formula> out;
  add_nil(out);
  add_e02(out);
  add_sol(out);
  add_compact(out);
  return out;
}

}  // namespace closed_forms
