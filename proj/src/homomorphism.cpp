#include "lieharm/homomorphism.hpp"

#include <cmath>

namespace lieharm {

Mat3<double> rot_yz(double a) {
  const double c = std::cos(a), s = std::sin(a);
  return Mat3<double>::rows({1, 0, 0, 0, c, s, 0, -s, c});
}

Mat3<double> rot_xz(double a) {
  const double c = std::cos(a), s = std::sin(a);
  return Mat3<double>::rows({c, 0, s, 0, 1, 0, -s, 0, c});
}

Mat3<double> rot_xy(double a) {
  const double c = std::cos(a), s = std::sin(a);
  return Mat3<double>::rows({c, s, 0, -s, c, 0, 0, 0, 1});
}

Mat3<double> boost_yz(double a) {
  const double c = std::cosh(a), s = std::sinh(a);
  return Mat3<double>::rows({1, 0, 0, 0, c, s, 0, s, c});
}

Mat3<double> boost_xz(double a) {
  const double c = std::cosh(a), s = std::sinh(a);
  return Mat3<double>::rows({c, 0, s, 0, 1, 0, s, 0, c});
}

const std::vector<FamilySpec>& family_catalog() {
  constexpr double pi = std::numbers::pi;
  static const std::vector<FamilySpec> families = [] {
    const std::vector<ParamRange> linear4{{"alpha", -10, 10}, {"beta", -10, 10}, {"a", -10, 10}, {"b", -10, 10}};
    const std::vector<ParamRange> xi1{{"a", -10, 10}, {"b", -10, 10}, {"gamma", -10, 10}};
    const std::vector<ParamRange> angle{{"a", -pi, pi}};
    const std::vector<ParamRange> hyper{{"a", -3, 3}};
    std::vector<FamilySpec> v{
        {"nil",
         AlgebraId::Nil,
         {{"alpha1", -10, 10}, {"alpha2", -10, 10}, {"alpha3", -10, 10}, {"beta1", -10, 10}, {"beta2", -10, 10},
          {"beta3", -10, 10}}},
        {"e02-xi1", AlgebraId::E02, xi1},
        {"e02-xi2", AlgebraId::E02, linear4},
        {"e02-xi3", AlgebraId::E02, linear4},
        {"sol-xi1", AlgebraId::Sol, xi1},
        {"sol-xi2", AlgebraId::Sol, linear4},
        {"sol-xi3", AlgebraId::Sol, linear4},
        {"su2-xi1", AlgebraId::Su2, angle, true},
        {"su2-xi2", AlgebraId::Su2, angle, true},
        {"su2-xi3", AlgebraId::Su2, angle, true},
        {"su2-xi3xi2xi1", AlgebraId::Su2, {{"a", -pi, pi}, {"b", -pi, pi}, {"c", -pi, pi}}, true},
        {"sl2-xi1", AlgebraId::Sl2, hyper, true},
        {"sl2-xi2", AlgebraId::Sl2, hyper, true},
        {"sl2-xi3", AlgebraId::Sl2, angle, true},
        {"sl2-xi3xi2xi1", AlgebraId::Sl2, {{"a", -pi, pi}, {"b", -3, 3}, {"c", -3, 3}}, true},
    };
    return v;
  }();
  return families;
}

const FamilySpec& family_spec(std::string_view tag) {
  for (const auto& f : family_catalog())
    if (f.tag == tag) return f;
  throw Error(ErrorKind::UnknownId, "unknown homomorphism family '" + std::string(tag) + "'");
}

namespace detail {

Mat3<double> trig_family_matrix(const FamilySpec& f, const ParamSet<double>& p) {
  const std::string& t = f.tag;
  if (t == "su2-xi1") return rot_yz(p.get("a"));
  if (t == "su2-xi2") return rot_xz(p.get("a"));
  if (t == "su2-xi3" || t == "sl2-xi3") return rot_xy(p.get("a"));
  if (t == "sl2-xi1") return boost_yz(p.get("a"));
  if (t == "sl2-xi2") return boost_xz(p.get("a"));
  if (t == "su2-xi3xi2xi1") return rot_xy(p.get("a")) * rot_xz(p.get("b")) * rot_yz(p.get("c"));
  if (t == "sl2-xi3xi2xi1") return rot_xy(p.get("a")) * boost_xz(p.get("b")) * boost_yz(p.get("c"));
  throw Error(ErrorKind::UnknownId, "unknown family '" + t + "'");
}

}  // namespace detail

}  // namespace lieharm
