#include "recfilt/error.hpp"

namespace recfilt {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SingularBackstep: return "SingularBackstep";
    case ErrorCode::RepeatedRoots: return "RepeatedRoots";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::TruncationUncertified: return "TruncationUncertified";
    case ErrorCode::NotCausalInput: return "NotCausalInput";
    case ErrorCode::PoleOnUnitCircle: return "PoleOnUnitCircle";
    case ErrorCode::NotSettled: return "NotSettled";
    case ErrorCode::Unstable: return "Unstable";
    case ErrorCode::RepeatedPoles: return "RepeatedPoles";
    case ErrorCode::PoleInsideRoc: return "PoleInsideRoc";
  }
  return "Unknown";
}

}  // namespace recfilt
