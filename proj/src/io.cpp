#include "lieharm/io.hpp"

namespace lieharm {

Rational json_rational(const Json& j) {
  if (j.is_number()) return parse_rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected a number or \"p/q\" string, got " + j.dump());
}

ParamSet<Rational> json_params(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "params must be an object");
  ParamSet<Rational> p;
  for (const auto& [k, v] : j.items()) p.set(k, json_rational(v));
  return p;
}

namespace {

Mat3<Rational> json_matrix(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 9)
    throw Error(ErrorKind::Parse, std::string(what) + " must be a row-major array of 9 numbers");
  Mat3<Rational> m;
  for (std::size_t k = 0; k < 9; ++k) m.a[k] = json_rational(j[k]);
  return m;
}

}  // namespace

MetricSpec parse_metric_spec(const Json& j) {
  MetricSpec s;
  if (j.is_array()) {
    s.gram = json_matrix(j, "metric");
    return s;
  }
  if (!j.is_object() || !j.contains("family")) throw Error(ErrorKind::Parse, "metric must be an array or {family, params}");
  s.family = j.at("family").get<std::string>();
  metric_family_info(s.family);
  if (j.contains("params")) s.params = json_params(j.at("params"));
  return s;
}

MapSpec parse_map_spec(const Json& j) {
  MapSpec s;
  if (j.is_array()) {
    s.matrix = json_matrix(j, "xi");
    return s;
  }
  if (!j.is_object() || !j.contains("family")) throw Error(ErrorKind::Parse, "xi must be an array or {family, params}");
  s.family = j.at("family").get<std::string>();
  family_spec(s.family);
  if (j.contains("params")) s.params = json_params(j.at("params"));
  return s;
}

ProblemSpec parse_problem(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "problem must be a JSON object");
  for (const char* key : {"metric1", "metric2", "xi"})
    if (!j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  ProblemSpec s;
  s.metric1 = parse_metric_spec(j.at("metric1"));
  s.metric2 = parse_metric_spec(j.at("metric2"));
  s.xi = parse_map_spec(j.at("xi"));
  if (j.contains("algebra"))
    s.algebra = parse_algebra_id(j.at("algebra").get<std::string>());
  else if (!s.xi.family.empty())
    s.algebra = family_spec(s.xi.family).algebra;
  else
    throw Error(ErrorKind::Parse, "missing field 'algebra'");
  if (!s.xi.family.empty() && family_spec(s.xi.family).algebra != s.algebra)
    throw Error(ErrorKind::Parse, "family " + s.xi.family + " does not act on " + std::string(to_string(s.algebra)));
  if (j.contains("params")) s.params = json_params(j.at("params"));
  return s;
}

bool ProblemSpec::rational_capable() const { return xi.family.empty() || !family_spec(xi.family).float_only; }

}  // namespace lieharm
