#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace medianlab {

enum class ErrorCode {
  InvalidInput,
  AxiomViolation,
  NotMorphism,
  NotConvex,
  NotSubalgebra,
  NotCube,
  TooLarge,
  NotAutomorphism,
  NotEquivariant,
  NotGenerating,
  NotFactorizable,
  NoWitness,
  SpectrumViolation,
  InternalInconsistency,
  Mismatch,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for every failure surfaced by the library. The code
/// distinguishes bad input (caller's fault) from broken invariants (ours).
class MedianError : public std::runtime_error {
 public:
  MedianError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

  /// True for errors that can only fire if the library itself is wrong.
  bool is_internal() const noexcept {
    return code_ == ErrorCode::NoWitness ||
           code_ == ErrorCode::SpectrumViolation ||
           code_ == ErrorCode::InternalInconsistency ||
           code_ == ErrorCode::Mismatch;
  }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace medianlab
