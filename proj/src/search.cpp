#include "lieharm/search.hpp"

#include "lieharm/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lieharm {

std::string_view to_string(Objective o) {
  return o == Objective::TensionNormSq ? "tension_norm_sq" : "bitension_norm_sq";
}

Objective parse_objective(std::string_view s) {
  if (s == "tension_norm_sq") return Objective::TensionNormSq;
  if (s == "bitension_norm_sq") return Objective::BitensionNormSq;
  throw Error(ErrorKind::Parse, "unknown objective '" + std::string(s) + "'");
}

namespace {

ParamSet<double> merged(const SearchSpec& s, const std::vector<double>& x) {
  ParamSet<double> p = s.fixed;
  for (std::size_t i = 0; i < s.free.size(); ++i) p.set(s.free[i].name, x[i]);
  return p;
}

double clamp(const FreeParam& f, double v) { return std::clamp(v, f.lo, f.hi); }

using Point = std::vector<double>;

struct Vertex {
  Point x;
  double f;
};

class NelderMead {
 public:
  NelderMead(const SearchSpec& s, std::size_t& evals) : s_(s), evals_(evals) {}

  Vertex run(Point x0) {
    const std::size_t n = x0.size();
    std::vector<Vertex> simplex;
    simplex.push_back(eval(x0));
    if (simplex[0].f <= 1e-6 * s_.tolerance) return simplex[0];
    for (std::size_t i = 0; i < n; ++i) {
      Point x = x0;
      const double step = 0.1 * (s_.free[i].hi - s_.free[i].lo);
      x[i] = x0[i] + step <= s_.free[i].hi ? x0[i] + step : x0[i] - step;
      simplex.push_back(eval(x));
    }
    const std::size_t budget = evals_ + s_.max_evals;
    while (evals_ < budget) {
      std::sort(simplex.begin(), simplex.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
      if (simplex[0].f == 0 || diameter(simplex) < 1e-10) break;
      Point centroid(n, 0.0);
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i] / static_cast<double>(n);
      const Vertex& worst = simplex[n];
      const Vertex r = eval(along(centroid, worst.x, 1.0));
      if (r.f < simplex[0].f) {
        const Vertex e = eval(along(centroid, worst.x, 2.0));
        simplex[n] = e.f < r.f ? e : r;
      } else if (r.f < simplex[n - 1].f) {
        simplex[n] = r;
      } else {
        const bool outside = r.f < worst.f;
        const Vertex c = eval(along(centroid, worst.x, outside ? 0.5 : -0.5));
        if (c.f < (outside ? r.f : worst.f)) {
          simplex[n] = c;
        } else {
          for (std::size_t v = 1; v <= n; ++v) {
            Point x(n);
            for (std::size_t i = 0; i < n; ++i) x[i] = simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
            simplex[v] = eval(x);
          }
        }
      }
    }
    return *std::min_element(simplex.begin(), simplex.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  }

 private:
  Vertex eval(Point x) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = clamp(s_.free[i], x[i]);
    ++evals_;
    const double f = objective_value(s_, x);
    return {std::move(x), f};
  }

  // centroid + t (centroid - worst)
  static Point along(const Point& c, const Point& w, double t) {
    Point x(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) x[i] = c[i] + t * (c[i] - w[i]);
    return x;
  }

  static double diameter(const std::vector<Vertex>& s) {
    double d = 0;
    for (std::size_t v = 1; v < s.size(); ++v)
      for (std::size_t i = 0; i < s[0].x.size(); ++i) d = std::max(d, std::fabs(s[v].x[i] - s[0].x[i]));
    return d;
  }

  const SearchSpec& s_;
  std::size_t& evals_;
};

Point random_point(const SearchSpec& s, Rng& rng) {
  Point x;
  for (const auto& f : s.free) x.push_back(rng.uniform(f.lo, f.hi));
  return x;
}

void check_spec(const SearchSpec& s) {
  if (s.free.empty()) throw Error(ErrorKind::NoFreeParams, "search needs at least one free parameter");
  for (const auto& f : s.free) {
    if (!(f.lo < f.hi)) throw Error(ErrorKind::ParamOutOfRange, "empty box for '" + f.name + "'");
    if (s.fixed.has(f.name)) throw Error(ErrorKind::Parse, "'" + f.name + "' is both fixed and free");
  }
  if (!(s.tolerance > 0)) throw Error(ErrorKind::ParamOutOfRange, "tolerance must be positive");
  if (s.start && s.start->size() != s.free.size()) throw Error(ErrorKind::Parse, "start has wrong dimension");
}

SearchResult result_of(const SearchSpec& s, const Vertex& v, std::size_t evals) {
  return {merged(s, v.x), v.f, evals, v.f < s.tolerance};
}

}  // namespace

Problem<double> search_problem(const SearchSpec& s, const std::vector<double>& x) {
  const ParamSet<double> p = merged(s, x);
  const FamilySpec& f = family_spec(s.family);
  return Problem<double>(f.algebra, build_metric<double>(s.metric1, p, "1"), build_metric<double>(s.metric2, p, "2"),
                         instantiate(f, p).m);
}

double objective_value(const SearchSpec& s, const std::vector<double>& x) {
  try {
    const Problem<double> p = search_problem(s, x);
    const Vec3<double> t = tau(p);
    const Vec3<double> v = s.objective == Objective::TensionNormSq ? t : tau2(p, t);
    return p.dst().metric().inner(v, v);
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
}

SearchResult minimize(const SearchSpec& s, std::uint64_t seed) {
  check_spec(s);
  Rng rng(derive_seed(seed, "minimize"));
  std::size_t evals = 0;
  Vertex best{{}, std::numeric_limits<double>::infinity()};
  for (unsigned r = 0; r < std::max(1u, s.restarts); ++r) {
    Point x0;
    if (r > 0) {
      x0 = random_point(s, rng);
    } else if (s.start) {
      x0 = *s.start;
    } else {
      for (const auto& f : s.free) x0.push_back(0.5 * (f.lo + f.hi));
    }
    const Vertex v = NelderMead(s, evals).run(std::move(x0));
    if (v.f < best.f) best = v;
    if (best.f < s.tolerance) break;
  }
  return result_of(s, best, evals);
}

std::vector<SearchResult> scan_biharmonic_not_harmonic(const SearchSpec& spec, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::ParamOutOfRange, "scan needs n >= 1");
  SearchSpec s = spec;
  s.objective = Objective::BitensionNormSq;
  check_spec(s);
  std::vector<SearchResult> out;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(derive_seed(seed, "scan", i));
    std::size_t evals = 0;
    const Vertex v = NelderMead(s, evals).run(random_point(s, rng));
    if (!(v.f < s.tolerance)) continue;
    const Problem<double> p = search_problem(s, v.x);
    const Vec3<double> t = tau(p);
    if (!(p.dst().metric().inner(t, t) > 1e3 * s.tolerance)) continue;
    const auto r = analyze(p);
    if (!r.biharmonic_not_harmonic() || !(r.tau_ratio() > kScanTauGap)) continue;
    out.push_back(result_of(s, v, evals));
  }
  std::stable_sort(out.begin(), out.end(), [](const SearchResult& a, const SearchResult& b) { return a.value < b.value; });
  return out;
}

SearchSpec parse_search_spec(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "search spec must be an object");
  SearchSpec s;
  s.family = j.at("family").get<std::string>();
  family_spec(s.family);
  s.metric1 = parse_metric_spec(j.at("metric1"));
  s.metric2 = parse_metric_spec(j.at("metric2"));
  if (j.contains("fixed")) s.fixed = json_params(j.at("fixed")).to_double();
  if (j.contains("free")) {
    for (const auto& [k, v] : j.at("free").items()) {
      if (!v.is_array() || v.size() != 2) throw Error(ErrorKind::Parse, "free '" + k + "' needs [lo, hi]");
      s.free.push_back({k, v[0].get<double>(), v[1].get<double>()});
    }
  }
  if (j.contains("objective")) s.objective = parse_objective(j.at("objective").get<std::string>());
  if (j.contains("tolerance")) s.tolerance = j.at("tolerance").get<double>();
  if (j.contains("max_evals")) s.max_evals = j.at("max_evals").get<std::size_t>();
  if (j.contains("restarts")) s.restarts = j.at("restarts").get<unsigned>();
  if (j.contains("start")) s.start = j.at("start").get<std::vector<double>>();
  check_spec(s);
  return s;
}

Json to_json(const SearchResult& r) {
  return {{"params", to_json(r.params)}, {"objective", r.value}, {"evals", r.evals}, {"converged", r.converged}};
}

}  // namespace lieharm
