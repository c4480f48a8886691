#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2spiral {

enum class ErrorCode {
  NonFinite,
  NonMonotone,
  WrongWinding,
  BiarcDegenerate,
  PositiveQ,
  NoConvergence,
  ConsistencyFailure,
  DegenerateMap,
  PoleOnCurve,
  CoincidentEndpoints,
  GrazingUnresolved,
  DomainError,
};

/// Stable machine-readable name, e.g. "WrongWinding".
std::string_view error_name(ErrorCode code);

class SpiralError : public std::runtime_error {
 public:
  SpiralError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace g2spiral
