#pragma once

#include "lieharm/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lieharm {

enum class Objective { TensionNormSq, BitensionNormSq };
std::string_view to_string(Objective o);
Objective parse_objective(std::string_view s);

struct FreeParam {
  std::string name;
  double lo;
  double hi;
};

/// Free parameters range over boxes; metrics given by family without their
/// own params read the merged fixed+free point with suffix 1/2.
struct SearchSpec {
  std::string family;
  MetricSpec metric1;
  MetricSpec metric2;
  ParamSet<double> fixed;
  std::vector<FreeParam> free;
  Objective objective = Objective::TensionNormSq;
  double tolerance = 1e-12;
  std::size_t max_evals = 20000;  // per restart
  unsigned restarts = 20;
  std::optional<std::vector<double>> start;
};

struct SearchResult {
  ParamSet<double> params;
  double value = 0;
  std::size_t evals = 0;
  bool converged = false;
};

/// Merges fixed and free values and builds the float problem.
Problem<double> search_problem(const SearchSpec& s, const std::vector<double>& x);

/// <tau,tau> or <tau2,tau2> in the target metric; +inf where the point is
/// not admissible.
double objective_value(const SearchSpec& s, const std::vector<double>& x);

/// Nelder-Mead with box clamping and random restarts.  The first restart
/// starts from `start` (or the box centre).
SearchResult minimize(const SearchSpec& s, std::uint64_t seed);

/// Minimizes the bitension objective from n random starts and keeps
/// converged points with <tau,tau> > 1e3 tolerance that re-analyze as
/// biharmonic and not harmonic with a clear gap: |tau2| <= 1e-9 scale2 and
/// |tau| > 1e-3 scale.  Near-degenerate maps where both are small are
/// dropped.  Sorted by objective.
inline constexpr double kScanTauGap = 1e-3;
std::vector<SearchResult> scan_biharmonic_not_harmonic(const SearchSpec& s, std::size_t n, std::uint64_t seed);

SearchSpec parse_search_spec(const Json& j);
Json to_json(const SearchResult& r);

}  // namespace lieharm
