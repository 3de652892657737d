#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lieharm {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitInput = 2;

/// Entry point for `lieharm <analyze|verify|search|report> ...`; args exclude
/// the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieharm
