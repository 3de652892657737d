#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <string>
#include <type_traits>

namespace lieharm {

/// Exact arithmetic path. Expression templates are disabled so that generic
/// code can use `auto` and temporaries freely.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, Rational>;

enum class ArithmeticPath { Rational, Float };

template <Scalar T>
constexpr ArithmeticPath path_of() {
  return is_exact_v<T> ? ArithmeticPath::Rational : ArithmeticPath::Float;
}

inline const char* to_string(ArithmeticPath p) {
  return p == ArithmeticPath::Rational ? "rational" : "float";
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline double abs_value(double x) { return std::fabs(x); }
inline double abs_value(const Rational& x) { return std::fabs(to_double(x)); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline std::string to_exact_string(double x) { return std::to_string(x); }
inline std::string to_exact_string(const Rational& x) { return x.str(); }

template <Scalar T>
T from_double(double x) {
  return T(x);
}

/// Parses "p/q", integers and plain decimals ("0.25", "-1.5e-3") exactly.
Rational parse_rational(const std::string& text);

}  // namespace lieharm
