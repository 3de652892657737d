#include "lieharm/metric.hpp"

namespace lieharm {

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  using boost::multiprecision::mpz_int;
  const mpz_int num = numerator(x), den = denominator(x);
  const mpz_int rn = sqrt(num), rd = sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

Mat3<double> orthonormal_frame(const Metric<double>& m) { return inverse(Metric<double>::cholesky_upper(m.gram())); }

Mat3<Rational> orthonormal_frame(const Metric<Rational>& m) {
  const auto& f = m.frame();
  std::array<Vec3<Rational>, 3> cols;
  for (std::size_t i = 0; i < 3; ++i) {
    auto s = rational_sqrt(f.weights[i]);
    if (!s) throw Error(ErrorKind::NotRational, "orthonormal frame needs an irrational normalisation");
    cols[i] = *s * f.vectors[i];
  }
  return Mat3<Rational>::from_columns(cols[0], cols[1], cols[2]);
}

const std::vector<MetricFamilyInfo>& metric_families() {
  static const std::vector<MetricFamilyInfo> families{
      {"nil", AlgebraId::Nil, {"lambda"}},
      {"e02", AlgebraId::E02, {"mu", "nu"}},
      {"sol", AlgebraId::Sol, {"mu", "nu"}},
      {"sol-diag", AlgebraId::Sol, {"nu"}},
      {"su2", AlgebraId::Su2, {"lambda", "mu", "nu"}},
      {"sl2", AlgebraId::Sl2, {"lambda", "mu", "nu"}},
      {"diag", AlgebraId::Su2, {"lambda", "mu", "nu"}},
  };
  return families;
}

const MetricFamilyInfo& metric_family_info(std::string_view tag) {
  for (const auto& f : metric_families())
    if (f.tag == tag) return f;
  throw Error(ErrorKind::UnknownId, "unknown metric family '" + std::string(tag) + "'");
}

}  // namespace lieharm
