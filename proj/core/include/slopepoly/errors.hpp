#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slopepoly {

enum class ErrorCode {
  InvalidInput,
  DegeneratePolygon,
  PointOnBoundary,
  ParallelLines,
  NonIntegralTurn,
  SlopeMismatch,
  SignatureMismatch,
  ReconstructionDegenerate,
  DegenerateHessian,
  InconsistentMinors,
  CoincidentVertices,
  AntipodalVertices,
  LengthMismatch,
  NotCritical,
  DegenerateCritical,
  Bifurcating,
  Exceptional,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Thrown by every checked operation in the library. The code is stable and
/// is what callers (and the CLI exit-code mapping) should dispatch on.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for errors that indicate the input itself is unusable, as opposed
  /// to an internal cross-check failing on valid input.
  bool is_input_error() const noexcept;

 private:
  ErrorCode code_;
};

}  // namespace slopepoly
