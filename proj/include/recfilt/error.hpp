#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace recfilt {

enum class ErrorCode {
  InvalidArgument,
  SingularBackstep,
  RepeatedRoots,
  SingularSystem,
  TruncationUncertified,
  NotCausalInput,
  PoleOnUnitCircle,
  NotSettled,
  Unstable,
  RepeatedPoles,
  PoleInsideRoc,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Raised by every library operation that cannot produce its result.
/// The code identifies the failure class; what() carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  /// what() without the leading code name.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace recfilt
