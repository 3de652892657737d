#pragma once

#include "lieharm/io.hpp"
#include "lieharm/random.hpp"

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace lieharm {

enum class Expected { Harmonic, BiharmonicNotHarmonic, BiharmonicIffHarmonic };
std::string_view to_string(Expected e);

/// A parameter point for a named homomorphism family.  Metric parameters
/// live in the same set with suffixes 1 and 2 (mu1, nu2, ...).
template <Scalar T>
struct Sample {
  std::string family;
  ParamSet<T> params;
};

using ExactSampler = std::function<Sample<Rational>(Rng&)>;
using FloatSampler = std::function<Sample<double>(Rng&)>;
using ConditionDistance = std::function<double(const Sample<double>&)>;

/// One enumerated branch of a classification statement.
///   condition_*: draws points satisfying the branch by construction.
///   generic_*:   draws unconstrained points of the same family/metric shape.
///   distance:    residual of the full condition set of the statement (0 on
///                the set); generic points closer than the margin are dropped.
/// Exactly one of the exact/float sampler pairs is populated.
struct TheoremCase {
  std::string id;
  std::string group;
  Expected expected = Expected::Harmonic;
  std::string metric1;
  std::string metric2;
  ExactSampler condition_exact;
  ExactSampler generic_exact;
  FloatSampler condition_float;
  FloatSampler generic_float;
  ConditionDistance distance;
  std::string note;

  bool exact() const { return static_cast<bool>(condition_exact); }
};

inline constexpr double kBoundaryMargin = 1e-3;

struct Failure {
  std::string pool;  // "condition" or "generic"
  std::string family;
  Json params;
  Json report;  // TensionReport, or {"error": ...}
};

struct SweepResult {
  std::string case_id;
  std::string expected;
  std::string arithmetic_path;
  std::size_t n_condition_samples = 0;
  std::size_t n_generic_samples = 0;
  std::size_t n_generic_discarded = 0;
  std::vector<Failure> failures;
  std::string note;

  bool passed() const { return failures.empty(); }
};

Json to_json(const SweepResult& r);

/// Builds the problem a case describes for one sample.
template <Scalar T>
Problem<T> sample_problem(const std::string& metric1, const std::string& metric2, const Sample<T>& s) {
  const FamilySpec& f = family_spec(s.family);
  return Problem<T>(f.algebra, metric_family<T>(metric1, s.params, "1"), metric_family<T>(metric2, s.params, "2"),
                    instantiate(f, s.params).m);
}

/// n condition samples and n generic samples, deterministic in seed.
SweepResult verify_case(const TheoremCase& c, std::size_t n, std::uint64_t seed, double tol = kDefaultTol);

/// harmonic <=> biharmonic over n problems drawn from every case of the
/// algebra's group (half on condition sets, half generic).
SweepResult verify_equivalence(AlgebraId id, std::size_t n, std::uint64_t seed, double tol = kDefaultTol);

const std::vector<TheoremCase>& theorem_catalog();

/// Cases whose id equals or starts with `pattern` followed by '.'; throws
/// UnknownId when nothing matches.
std::vector<const TheoremCase*> select_cases(const std::vector<std::string>& ids,
                                             const std::vector<std::string>& groups);

/// Runs cases on `threads` workers; results keep catalog order.
std::vector<SweepResult> run_cases(const std::vector<const TheoremCase*>& cases, std::size_t n, std::uint64_t seed,
                                   double tol = kDefaultTol, unsigned threads = 0);

}  // namespace lieharm
