#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wkb {

enum class ErrorCode {
  Domain,
  Precondition,
  NoClassicalRegion,
  SingleTurningPoint,
  MultiWell,
  NonConvergence,
  NoBoundState,
  TurningPointSingularity,
  NodeCountMismatch,
  GridTooSmall,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a code so callers (spectrum
/// rows, CLI exit codes) can branch on the reason without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wkb
