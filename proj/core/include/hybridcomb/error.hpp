#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hybridcomb {

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class ErrorKind {
  InvalidParameter,
  DegenerateMomentum,
  PoleHit,
  NotApplicable,
  OpaqueRegime,
  SingularConversion,
  ScanTooCoarse,
  NotCritical,
  InvalidRegime,
  QuadratureFailure,
  BoseDivergence,
  MergeSingular,
  GridTooLarge,
  NonPositiveInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hybridcomb
