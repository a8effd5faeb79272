#include "medianlab/errors.hpp"

namespace medianlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::NotMorphism: return "NotMorphism";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::NotSubalgebra: return "NotSubalgebra";
    case ErrorCode::NotCube: return "NotCube";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::NotFactorizable: return "NotFactorizable";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::SpectrumViolation: return "SpectrumViolation";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::Mismatch: return "Mismatch";
  }
  return "Unknown";
}

}  // namespace medianlab
