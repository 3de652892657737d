#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lieharm {

enum class ErrorKind {
  DegenerateMetric,
  ParamOutOfRange,
  NotHomomorphism,
  NotAutomorphism,
  Singular,
  UnknownId,
  SamplingInfeasible,
  NoFreeParams,
  NotRational,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure carries a machine-readable kind; what() is
/// "<Kind>: <detail>" so the CLI can forward it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lieharm
