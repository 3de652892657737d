#include "lieharm/algebra.hpp"

#include <regex>

namespace lieharm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateMetric: return "DegenerateMetric";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::SamplingInfeasible: return "SamplingInfeasible";
    case ErrorKind::NoFreeParams: return "NoFreeParams";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::Parse: return "Parse";
  }
  return "Error";
}

Rational parse_rational(const std::string& text) {
  static const std::regex fraction(R"(\s*([+-]?)(\d+)\s*/\s*(\d+)\s*)");
  static const std::regex decimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    auto decimal_int = [](std::string d) { return Rational(d.erase(0, std::min(d.find_first_not_of('0'), d.size() - 1))); };
    const Rational den = decimal_int(m[3].str());
    if (den.is_zero()) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
    const Rational value = decimal_int(m[2].str()) / den;
    return m[1].str() == "-" ? Rational(-value) : value;
  }
  if (std::regex_match(text, m, decimal) && (m[2].length() + m[3].length()) > 0) {
    // Leading zeros would select octal in the string constructor.
    std::string digits = m[2].str() + m[3].str();
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    Rational value(digits);
    long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
    exponent -= static_cast<long>(m[3].length());
    Rational ten(10);
    for (long e = 0; e < (exponent < 0 ? -exponent : exponent); ++e) {
      if (exponent > 0)
        value *= ten;
      else
        value /= ten;
    }
    return m[1].str() == "-" ? Rational(-value) : value;
  }
  throw Error(ErrorKind::Parse, "not a rational number: '" + text + "'");
}

std::string_view to_string(AlgebraId id) {
  switch (id) {
    case AlgebraId::Nil: return "nil";
    case AlgebraId::E02: return "e02";
    case AlgebraId::Sol: return "sol";
    case AlgebraId::Su2: return "su2";
    case AlgebraId::Sl2: return "sl2";
  }
  return "?";
}

AlgebraId parse_algebra_id(std::string_view name) {
  for (AlgebraId id : all_algebras())
    if (to_string(id) == name) return id;
  throw Error(ErrorKind::UnknownId, "unknown algebra '" + std::string(name) + "'");
}

const std::vector<AlgebraId>& all_algebras() {
  static const std::vector<AlgebraId> ids{AlgebraId::Nil, AlgebraId::E02, AlgebraId::Sol, AlgebraId::Su2,
                                          AlgebraId::Sl2};
  return ids;
}

std::array<int, 27> structure_constants(AlgebraId id) {
  std::array<int, 27> c{};
  // Zero-based indices: set([X_i, X_j]) = value * X_k and its antisymmetric partner.
  auto set = [&c](int i, int j, int k, int value) {
    c[static_cast<std::size_t>(9 * i + 3 * j + k)] = value;
    c[static_cast<std::size_t>(9 * j + 3 * i + k)] = -value;
  };
  switch (id) {
    case AlgebraId::Nil:
      set(0, 1, 2, 1);
      break;
    case AlgebraId::Su2:
      set(0, 1, 2, 1);
      set(1, 2, 0, 1);
      set(2, 0, 1, 1);
      break;
    case AlgebraId::Sl2:
      set(0, 1, 2, -1);
      set(1, 2, 0, 1);
      set(2, 0, 1, 1);
      break;
    case AlgebraId::Sol:
      set(2, 0, 0, 1);
      set(2, 1, 1, -1);
      break;
    case AlgebraId::E02:
      set(2, 0, 1, 1);
      set(2, 1, 0, -1);
      break;
  }
  return c;
}

}  // namespace lieharm
