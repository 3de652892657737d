#include "lieharm/cli.hpp"

#include "lieharm/report.hpp"
#include "lieharm/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace lieharm {

namespace {

struct Common {
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  std::string out_path;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

// Machine output goes to --out when given (summary to out), else to out.
void emit(const Common& c, const Json& j, const std::string& summary, std::ostream& out) {
  if (c.out_path.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(c.out_path);
  if (!f) throw Error(ErrorKind::Parse, "cannot write '" + c.out_path + "'");
  f << j.dump(2) << '\n';
  out << summary;
}

template <Scalar T>
Json analyze_as(const ProblemSpec& s, double tol) {
  return to_json(analyze(build_problem<T>(s), tol));
}

std::string report_summary(const Json& r) {
  std::ostringstream os;
  os << "path " << r["arithmetic_path"].get<std::string>() << "  harmonic " << r["harmonic"] << "  biharmonic "
     << r["biharmonic"] << "  det(M) " << r["det_test"] << '\n';
  return os.str();
}

int cmd_analyze(const std::string& input, const Common& c, bool want_exact, bool want_float, std::ostream& out) {
  const ProblemSpec spec = parse_problem(read_json(input));
  if (want_exact && !spec.rational_capable())
    throw Error(ErrorKind::NotRational, "the map family needs trigonometric entries; use --float");
  const bool exact = !want_float && spec.rational_capable();
  const Json r = exact ? analyze_as<Rational>(spec, c.tol) : analyze_as<double>(spec, c.tol);
  emit(c, r, report_summary(r), out);
  return kExitPass;
}

std::string verify_summary(const std::vector<SweepResult>& rs) {
  std::ostringstream os;
  std::size_t failed = 0;
  os << std::left << std::setw(26) << "case" << std::setw(10) << "path" << std::right << std::setw(8) << "cond"
     << std::setw(9) << "generic" << std::setw(8) << "disc" << std::setw(8) << "fail" << '\n';
  for (const auto& r : rs) {
    os << std::left << std::setw(26) << r.case_id << std::setw(10) << r.arithmetic_path << std::right << std::setw(8)
       << r.n_condition_samples << std::setw(9) << r.n_generic_samples << std::setw(8) << r.n_generic_discarded
       << std::setw(8) << r.failures.size() << '\n';
    failed += !r.passed();
  }
  os << rs.size() - failed << "/" << rs.size() << " cases passed\n";
  return os.str();
}

int cmd_verify(const std::vector<std::string>& ids, const std::vector<std::string>& groups, std::size_t n,
               unsigned threads, const Common& c, std::ostream& out) {
  const auto cases = select_cases(ids, groups);
  std::vector<SweepResult> results = run_cases(cases, n, c.seed, c.tol, threads);
  for (AlgebraId id : {AlgebraId::Nil, AlgebraId::Sol}) {
    const std::string g(to_string(id));
    if ((ids.empty() && groups.empty()) || std::find(groups.begin(), groups.end(), g) != groups.end())
      results.push_back(verify_equivalence(id, n, c.seed, c.tol));
  }
  Json j = Json::array();
  for (const auto& r : results) j.push_back(to_json(r));
  const std::string summary = verify_summary(results);
  emit(c, j, summary, out);
  if (!c.out_path.empty()) out.flush();
  const bool ok = std::all_of(results.begin(), results.end(), [](const SweepResult& r) { return r.passed(); });
  return ok ? kExitPass : kExitFailures;
}

int cmd_search(const std::string& input, std::optional<std::size_t> n, const Common& c, std::ostream& out) {
  const Json j = read_json(input);
  const SearchSpec spec = parse_search_spec(j);
  const std::string mode = j.value("mode", std::string("minimize"));
  Json results = Json::array();
  if (mode == "minimize") {
    results.push_back(to_json(minimize(spec, c.seed)));
  } else if (mode == "scan") {
    const std::size_t count = n ? *n : j.value("n", std::size_t{20});
    for (const auto& r : scan_biharmonic_not_harmonic(spec, count, c.seed)) results.push_back(to_json(r));
  } else {
    throw Error(ErrorKind::Parse, "unknown search mode '" + mode + "'");
  }
  Json doc{{"mode", mode}, {"family", spec.family}, {"objective", to_string(spec.objective)}, {"results", results}};
  emit(c, doc, std::to_string(results.size()) + " result(s)\n", out);
  return kExitPass;
}

int cmd_report(std::size_t n, const std::string& results_path, const Common& c, std::ostream& out) {
  Json doc = discrepancy_report(n, c.seed);
  if (!results_path.empty()) doc["results"] = summarize_results(read_json(results_path));
  std::ostringstream summary;
  for (const auto& p : doc["probes"])
    summary << std::left << std::setw(22) << p["id"].get<std::string>() << (p["passed"].get<bool>() ? "ok" : "open")
            << '\n';
  emit(c, doc, summary.str(), out);
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic and biharmonic homomorphisms between three-dimensional metric Lie algebras", "lieharm"};
  app.require_subcommand(1);
  Common c;
  auto common = [&c](CLI::App* sub, bool with_tol) {
    if (with_tol) sub->add_option("--tol", c.tol, "verdict tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--out", c.out_path, "write JSON here instead of stdout");
  };

  std::string input;
  bool want_exact = false, want_float = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "tension, bitension and verdicts for a problem file");
  analyze_cmd->add_option("input", input, "problem JSON")->required();
  auto* ex = analyze_cmd->add_flag("--exact", want_exact, "rational arithmetic");
  analyze_cmd->add_flag("--float", want_float, "double arithmetic")->excludes(ex);
  common(analyze_cmd, true);

  std::vector<std::string> ids, groups;
  std::size_t n = 500;
  unsigned threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "sweep the classification cases");
  verify_cmd->add_option("--case", ids, "case id or id prefix");
  verify_cmd->add_option("--group", groups, "algebra group (nil, e02, sol, su2, sl2)");
  verify_cmd->add_option("--n", n, "samples per pool")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
  common(verify_cmd, true);

  std::string spec_path;
  std::optional<std::size_t> scan_n;
  auto* search_cmd = app.add_subcommand("search", "minimize tension or bitension over a parameter box");
  search_cmd->add_option("input", spec_path, "search spec JSON")->required();
  search_cmd->add_option("--n", scan_n, "scan starts")->check(CLI::PositiveNumber);
  common(search_cmd, false);

  std::size_t probe_n = 100;
  std::string results_path;
  auto* report_cmd = app.add_subcommand("report", "discrepancy probes and results summary");
  report_cmd->add_option("--n", probe_n, "random draws per probe")->check(CLI::PositiveNumber);
  report_cmd->add_option("--results", results_path, "verify output to summarize");
  common(report_cmd, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(input, c, want_exact, want_float, out);
    if (*verify_cmd) return cmd_verify(ids, groups, n, threads, c, out);
    if (*search_cmd) return cmd_search(spec_path, scan_n, c, out);
    if (*report_cmd) return cmd_report(probe_n, results_path, c, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitInput;
  } catch (const Json::exception& e) {
    err << "Parse: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace lieharm
