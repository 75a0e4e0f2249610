#include "hybridcomb/error.hpp"

namespace hybridcomb {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::DegenerateMomentum: return "DegenerateMomentum";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::OpaqueRegime: return "OpaqueRegime";
    case ErrorKind::SingularConversion: return "SingularConversion";
    case ErrorKind::ScanTooCoarse: return "ScanTooCoarse";
    case ErrorKind::NotCritical: return "NotCritical";
    case ErrorKind::InvalidRegime: return "InvalidRegime";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::BoseDivergence: return "BoseDivergence";
    case ErrorKind::MergeSingular: return "MergeSingular";
    case ErrorKind::GridTooLarge: return "GridTooLarge";
    case ErrorKind::NonPositiveInput: return "NonPositiveInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace hybridcomb
