#pragma once

#include "lieharm/scalar.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace lieharm {

/// Seeded generator with platform-independent derived draws (the standard
/// distributions are implementation-defined, so they are avoided here).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }
  int sign() { return coin() ? 1 : -1; }

  /// Random rational p/q in [lo, hi] with 1 <= q <= max_den.
  Rational rational(double lo, double hi, int max_den = 12) {
    for (;;) {
      const auto q = integer(1, max_den);
      const auto p_lo = static_cast<std::int64_t>(std::ceil(lo * static_cast<double>(q)));
      const auto p_hi = static_cast<std::int64_t>(std::floor(hi * static_cast<double>(q)));
      if (p_lo > p_hi) continue;
      return Rational(integer(p_lo, p_hi), q);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Deterministic seed for a named sub-stream (FNV-1a of the tag, mixed with
/// the base seed and an index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char ch : tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  std::uint64_t z = h ^ (seed + 0x9E3779B97F4A7C15ULL * (index + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Scalar-typed draws: rationals with small denominators on the exact path,
/// doubles otherwise.
template <Scalar T>
struct Draw {
  using value_type = T;
  Rng& rng;

  T uniform(double lo, double hi) {
    if constexpr (is_exact_v<T>)
      return rng.rational(lo, hi);
    else
      return rng.uniform(lo, hi);
  }

  /// Uniform on [lo, hi] with |x| >= 1/20.
  T nonzero(double lo, double hi) {
    for (;;) {
      T x = uniform(lo, hi);
      if (abs_value(x) >= 0.05) return x;
    }
  }

  int sign() { return rng.sign(); }
  bool coin() { return rng.coin(); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return rng.integer(lo, hi); }
  double real(double lo, double hi) { return rng.uniform(lo, hi); }
};

}  // namespace lieharm
