#include "lieharm/report.hpp"

#include <cmath>

namespace lieharm {

namespace {

template <Scalar T>
Json evaluate(const std::string& reading, const std::string& m1, const std::string& m2, const Sample<T>& s) {
  Json j{{"reading", reading}, {"family", s.family}};
  j["params"] = is_exact_v<T> ? exact_strings(s.params) : to_json(s.params);
  try {
    const auto r = analyze(sample_problem<T>(m1, m2, s));
    j["harmonic"] = r.harmonic;
    j["biharmonic"] = r.biharmonic;
    j["tau"] = to_json(r.tau);
    j["tau2"] = to_json(r.tau2);
  } catch (const Error& e) {
    j["error"] = e.what();
  }
  return j;
}

bool is_bnh(const Json& j) { return j.value("biharmonic", false) && !j.value("harmonic", true); }
bool is_harmonic(const Json& j) { return j.value("harmonic", false); }

// a = eps b mu2 sqrt(m) with alpha^2 = c (mu2^2 nu2 + a^2 (mu2-1)^2) / (d nu1 (mu2-1)^2 (1-mu1));
// the proof reading has m = mu2, c = mu1, d = mu2 sqrt(mu2); the statement
// reading has m = mu1, c = sqrt(mu1), d = mu2.  mu_i = s_i^2 keeps both
// rational; nu1 is solved from alpha.
Sample<Rational> e02_bnh_point(const char* fam, bool proof, int eps, Rational s1, Rational s2, Rational b,
                               Rational al, Rational nu2) {
  const Rational mu1 = s1 * s1, mu2 = s2 * s2;
  const Rational a = Rational(eps) * b * mu2 * (proof ? s2 : s1);
  const Rational q = (mu2 - 1) * (mu2 - 1);
  const Rational num = (proof ? mu1 : s1) * (mu2 * mu2 * nu2 + a * a * q);
  const Rational den = (proof ? mu2 * s2 : mu2) * q * (Rational(1) - mu1) * al * al;
  ParamSet<Rational> p{{"alpha", al}, {"beta", Rational(eps) * al}, {"a", a}, {"b", b}, {"mu1", mu1},
                       {"nu1", num / den}, {"mu2", mu2}, {"nu2", nu2}};
  return {fam, p};
}

Json probe_e02_sqrt(std::size_t n, std::uint64_t seed) {
  Json items = Json::array();
  bool proof_all = true, statement_all = true, discriminates = false;
  for (const char* fam : {"e02-xi2", "e02-xi3"}) {
    Json fixed = Json::array();
    std::size_t proof_ok = 0, statement_ok = 0, total = 0;
    for (int eps : {1, -1}) {
      for (bool proof : {true, false}) {
        const auto s = e02_bnh_point(fam, proof, eps, Rational(2, 3), Rational(1, 2), Rational(1), Rational(1),
                                     Rational(1));
        fixed.push_back(evaluate(proof ? "proof: a = eps b mu2 sqrt(mu2)" : "statement: a = eps b mu2 sqrt(mu1)",
                                 "e02", "e02", s));
      }
    }
    Rng rng(derive_seed(seed, std::string("probe.e02-sqrt.") + fam));
    for (std::size_t i = 0; i < n; ++i) {
      Rational s1, s2;
      do {
        s1 = rng.rational(0.3, 0.95);
        s2 = rng.rational(0.3, 0.95);
      } while (s1 == s2);
      const int eps = rng.sign();
      Draw<Rational> d{rng};
      const Rational b = d.nonzero(-5, 5), al = d.nonzero(-5, 5), nu2 = d.uniform(0.1, 10);
      proof_ok += is_bnh(evaluate("", "e02", "e02", e02_bnh_point(fam, true, eps, s1, s2, b, al, nu2)));
      statement_ok += is_bnh(evaluate("", "e02", "e02", e02_bnh_point(fam, false, eps, s1, s2, b, al, nu2)));
      ++total;
    }
    proof_all = proof_all && proof_ok == total;
    statement_all = statement_all && statement_ok == total;
    discriminates = discriminates || proof_ok != statement_ok;
    items.push_back({{"family", fam},
                     {"fixed_point", fixed},
                     {"random_draws", total},
                     {"proof_reading_biharmonic_not_harmonic", proof_ok},
                     {"statement_reading_biharmonic_not_harmonic", statement_ok}});
  }
  Json verified = Json::array();
  if (proof_all) verified.push_back("proof");
  if (statement_all) verified.push_back("statement");
  return {{"id", "thm4.2.2-3.sqrt"},
          {"question", "a = eps b mu2 sqrt(mu1) (statement) or a = eps b mu2 sqrt(mu2) (proof, from a^2 = b^2 mu2^3)"},
          {"families", items},
          {"verified_readings", verified},
          {"discriminates", discriminates},
          {"passed", !verified.empty() && discriminates}};
}

Json probe_e02_mu1() {
  Json rows = Json::array();
  for (const char* fam : {"e02-xi2", "e02-xi3"}) {
    ParamSet<Rational> p{{"alpha", Rational(1)}, {"beta", Rational(1)}, {"a", Rational(0)}, {"b", Rational(0)},
                         {"mu1", Rational(1)}, {"nu1", Rational(1)}, {"mu2", Rational(1, 2)}, {"nu2", Rational(1)}};
    rows.push_back(evaluate("mu1 = 1, a = b = 0, alpha^2 = beta^2", "e02", "e02", Sample<Rational>{fam, p}));
  }
  const bool harmonic = std::all_of(rows.begin(), rows.end(), is_harmonic);
  return {{"id", "thm4.2.2-3.mu1"},
          {"question", "hypothesis printed as mu1 != 0; the proof works under mu1 < 1, mu2 < 1"},
          {"evaluations", rows},
          {"conclusion", harmonic ? "at mu1 = 1 the a = b = 0 branch is harmonic, so the hypothesis must read mu1 != 1"
                                  : "mu1 = 1 does not make the branch harmonic"},
          {"passed", harmonic}};
}

Json probe_e02_item1() {
  ParamSet<Rational> p{{"a", Rational(1)},  {"b", Rational(1)},   {"gamma", Rational(0)},
                       {"mu1", Rational(1, 2)}, {"nu1", Rational(1)}, {"mu2", Rational(1)}, {"nu2", Rational(1)}};
  Json row = evaluate("mu2 = 1, gamma = 0, a = b = 1", "e02", "e02", Sample<Rational>{"e02-xi1", p});
  return {{"id", "thm4.2.1.mu2"},
          {"question", "the biharmonic-not-harmonic family a^2 = b^2 carries no mu2 != 1 hypothesis"},
          {"evaluations", Json::array({row})},
          {"conclusion", is_harmonic(row) ? "at mu2 = 1 the map is harmonic; mu2 != 1 is implicitly required"
                                          : "mu2 = 1 keeps the map non-harmonic"},
          {"passed", is_harmonic(row)}};
}

Json probe_sol_xi3() {
  // Diagonal source, non-diagonal target, xi3 with a = b = 0.
  const Rational r(3, 2);
  auto point = [](Rational al, Rational be, Rational mu2) {
    ParamSet<Rational> p{{"alpha", al}, {"beta", be}, {"a", Rational(0)}, {"b", Rational(0)}, {"nu1", Rational(1)},
                         {"mu2", mu2},  {"nu2", Rational(2)}};
    return Sample<Rational>{"sol-xi3", p};
  };
  Json computed = evaluate("beta^2 = alpha^2 mu2", "sol-diag", "sol", point(Rational(1), r, r * r));
  Json printed = evaluate("mu2 = alpha^2 / beta^2", "sol-diag", "sol", point(r, Rational(1), r * r));
  Json verified = Json::array();
  if (is_harmonic(computed)) verified.push_back("beta^2 = alpha^2 mu2");
  if (is_harmonic(printed)) verified.push_back("mu2 = alpha^2 / beta^2");
  return {{"id", "thm5.1.2.xi3"},
          {"question", "for xi3 the statement prints mu2 = alpha^2/beta^2, the same relation as for xi2"},
          {"evaluations", Json::array({computed, printed})},
          {"verified_readings", verified},
          {"passed", is_harmonic(computed) && !is_harmonic(printed)}};
}

Json probe_sl2_typo() {
  // b, c != 0 so Q != 0; lambda1 < mu1.
  auto point = [](double la2, double mu2, double nu2) {
    ParamSet<double> p{{"a", 0.7},    {"b", 0.4},     {"c", -0.3},   {"lambda1", 1.0}, {"mu1", 2.0},
                       {"nu1", 1.5},  {"lambda2", la2}, {"mu2", mu2}, {"nu2", nu2}};
    return Sample<double>{"sl2-xi3xi2xi1", p};
  };
  Json lam_eq_mu = evaluate("lambda2 = mu2", "sl2", "sl2", point(2.0, 2.0, 1.0));
  Json lam_eq_nu = evaluate("lambda2 = nu2", "sl2", "sl2", point(1.0, 3.0, 1.0));
  const double x3_mu = lam_eq_mu["tau"][2].get<double>(), x3_nu = lam_eq_nu["tau"][2].get<double>();
  const bool computed = std::fabs(x3_mu) < 1e-12 && std::fabs(x3_nu) > 1e-6;
  return {{"id", "thm7.1.tau-x3"},
          {"question", "X3 coefficient of the composite tension printed with factor (lambda2 - nu2)"},
          {"evaluations", Json::array({lam_eq_mu, lam_eq_nu})},
          {"conclusion", computed ? "the X3 coefficient vanishes at lambda2 = mu2, not at lambda2 = nu2: the factor is "
                                    "(lambda2 - mu2)"
                                  : "inconclusive"},
          {"passed", computed}};
}

Json probe_su2_curve() {
  const double q = std::acos(std::pow(0.5, 0.25));
  const double cb = 0.9, ca = std::sqrt(0.5) / cb;
  auto point = [](double a, double b, double c) {
    ParamSet<double> p{{"a", a},   {"b", b},      {"c", c},   {"lambda1", 3.0}, {"mu1", 1.0},
                       {"nu1", 1.0}, {"lambda2", 2.0}, {"mu2", 0.5}, {"nu2", 0.5}};
    return Sample<double>{"su2-xi3xi2xi1", p};
  };
  Json printed = evaluate("cos a = cos b = 2^(-1/4)", "su2", "su2", point(q, q, 0.3));
  Json other = evaluate("cos b = 0.9, cos^2 a cos^2 b = 1/2", "su2", "su2", point(std::acos(ca), std::acos(cb), 1.1));
  return {{"id", "example6.curve"},
          {"question", "the printed point lies on the curve cos^2 a cos^2 b = 1/2"},
          {"evaluations", Json::array({printed, other})},
          {"passed", is_bnh(printed) && is_bnh(other)}};
}

}  // namespace

Json discrepancy_report(std::size_t n, std::uint64_t seed) {
  Json probes = Json::array({probe_e02_sqrt(n, seed), probe_e02_mu1(), probe_e02_item1(), probe_sol_xi3(),
                             probe_sl2_typo(), probe_su2_curve()});
  Json flags = Json::array(
      {{{"id", "thm6.1.1.hypothesis"},
        {"note", "item 1 states the same metric ordering twice; only that ordering is verified (cases thm6.1.1.*)"}}});
  return {{"probes", probes}, {"flags", flags}};
}

Json summarize_results(const Json& results) {
  if (!results.is_array()) throw Error(ErrorKind::Parse, "results must be an array of sweep results");
  std::size_t passed = 0, samples = 0;
  Json failed = Json::array();
  for (const auto& r : results) {
    samples += r.value("n_condition_samples", std::size_t{0}) + r.value("n_generic_samples", std::size_t{0});
    if (r.value("passed", false))
      ++passed;
    else
      failed.push_back(r.value("case", std::string("?")));
  }
  return {{"cases", results.size()}, {"passed", passed}, {"failed", failed}, {"samples", samples}};
}

}  // namespace lieharm
