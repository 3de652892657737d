#pragma once

#include "lieharm/classification.hpp"

namespace lieharm {

/// Probes where the printed statements and the computed tension disagree or
/// are ambiguous.  Each probe evaluates every reading on a fixed point and on
/// n random draws and records which readings hold.
Json discrepancy_report(std::size_t n = 100, std::uint64_t seed = 0);

/// Pass/fail counts of a verify results array.
Json summarize_results(const Json& results);

}  // namespace lieharm
