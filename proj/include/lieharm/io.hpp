#pragma once

#include "lieharm/tension.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace lieharm {

using Json = nlohmann::json;

/// Reads a JSON number (from its literal text) or a "p/q" string exactly.
Rational json_rational(const Json& j);
ParamSet<Rational> json_params(const Json& j);

template <Scalar T>
Json to_json(const Vec3<T>& v) {
  return Json::array({to_double(v[0]), to_double(v[1]), to_double(v[2])});
}

template <Scalar T>
Json to_json(const Mat3<T>& m) {
  Json a = Json::array();
  for (const auto& x : m.a) a.push_back(to_double(x));
  return a;
}

template <Scalar T>
Json to_json(const ParamSet<T>& p) {
  Json o = Json::object();
  for (const auto& [k, v] : p.items()) o[k] = to_double(v);
  return o;
}

template <Scalar T>
Json exact_strings(const ParamSet<T>& p) {
  Json o = Json::object();
  for (const auto& [k, v] : p.items()) o[k] = to_exact_string(v);
  return o;
}

template <Scalar T>
Json to_json(const TensionReport<T>& r) {
  Json j{{"tau", to_json(r.tau)},
         {"tau2", to_json(r.tau2)},
         {"test_matrix", to_json(r.test_matrix)},
         {"det_test", to_double(r.det_test)},
         {"harmonic", r.harmonic},
         {"biharmonic", r.biharmonic},
         {"tolerance_used", r.tolerance_used},
         {"arithmetic_path", to_string(r.arithmetic_path)},
         {"scales", {{"tau", r.tau_scale}, {"tau2", r.tau2_scale}, {"det_test", r.det_scale}}},
         {"frame", r.frame}};
  if constexpr (is_exact_v<T>) {
    auto strs = [](const auto& container) {
      Json a = Json::array();
      for (const auto& x : container) a.push_back(to_exact_string(x));
      return a;
    };
    j["exact"] = {{"tau", strs(r.tau.c)},
                  {"tau2", strs(r.tau2.c)},
                  {"test_matrix", strs(r.test_matrix.a)},
                  {"det_test", to_exact_string(r.det_test)}};
  }
  return j;
}

/// A metric given either as a row-major Gram matrix or as a family tag with
/// parameters.  A family without its own "params" reads the problem-level
/// parameters with suffix "1" or "2".
struct MetricSpec {
  std::optional<Mat3<Rational>> gram;
  std::string family;
  std::optional<ParamSet<Rational>> params;
};

struct MapSpec {
  std::optional<Mat3<Rational>> matrix;
  std::string family;
  ParamSet<Rational> params;
};

/// {"algebra": "...", "metric1": ..., "metric2": ..., "xi": [9] | {"family", "params"},
///  "params": {...} (optional, shared)}
struct ProblemSpec {
  AlgebraId algebra = AlgebraId::Nil;
  MetricSpec metric1;
  MetricSpec metric2;
  MapSpec xi;
  ParamSet<Rational> params;

  /// False when the map family needs trigonometric entries.
  bool rational_capable() const;
};

MetricSpec parse_metric_spec(const Json& j);
MapSpec parse_map_spec(const Json& j);
ProblemSpec parse_problem(const Json& j);

template <Scalar T>
ParamSet<T> convert_params(const ParamSet<Rational>& p) {
  if constexpr (is_exact_v<T>)
    return p;
  else
    return p.to_double();
}

template <Scalar T>
Metric<T> build_metric(const MetricSpec& s, const ParamSet<T>& shared, const char* suffix) {
  if (s.gram) {
    if constexpr (is_exact_v<T>)
      return Metric<T>(*s.gram);
    else
      return Metric<T>(to_double(*s.gram));
  }
  if (s.params) return metric_family<T>(s.family, convert_params<T>(*s.params));
  return metric_family<T>(s.family, shared, suffix);
}

template <Scalar T>
Mat3<T> build_map(const MapSpec& s, const ParamSet<T>& shared) {
  if (s.matrix) {
    if constexpr (is_exact_v<T>)
      return *s.matrix;
    else
      return to_double(*s.matrix);
  }
  ParamSet<T> p = shared;
  const ParamSet<T> own = convert_params<T>(s.params);
  for (const auto& [k, v] : own.items()) p.set(k, v);
  return family_matrix(family_spec(s.family), p);
}

template <Scalar T>
Problem<T> build_problem(const ProblemSpec& s) {
  const ParamSet<T> shared = convert_params<T>(s.params);
  return Problem<T>(s.algebra, build_metric<T>(s.metric1, shared, "1"), build_metric<T>(s.metric2, shared, "2"),
                    build_map<T>(s.xi, shared));
}

}  // namespace lieharm
