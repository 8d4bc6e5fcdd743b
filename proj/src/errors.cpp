#include "cremona/errors.hpp"

namespace cremona {

const char* name(ValidationKind k) {
  switch (k) {
    case ValidationKind::FieldMismatch: return "FieldMismatch";
    case ValidationKind::DomainMismatch: return "DomainMismatch";
    case ValidationKind::ArityMismatch: return "ArityMismatch";
    case ValidationKind::DimensionMismatch: return "DimensionMismatch";
    case ValidationKind::DivisionByZero: return "DivisionByZero";
    case ValidationKind::ZeroTuple: return "ZeroTuple";
    case ValidationKind::MissingInverse: return "MissingInverse";
    case ValidationKind::NotFixed: return "NotFixed";
    case ValidationKind::IndeterminateAtPoint: return "IndeterminateAtPoint";
    case ValidationKind::NotLocalIso: return "NotLocalIso";
    case ValidationKind::InvalidParameter: return "InvalidParameter";
    case ValidationKind::DeterminantNotOne: return "DeterminantNotOne";
    case ValidationKind::SizeMismatch: return "SizeMismatch";
    case ValidationKind::UnsupportedFieldSize: return "UnsupportedFieldSize";
    case ValidationKind::UnsupportedField: return "UnsupportedField";
    case ValidationKind::ParseError: return "ParseError";
  }
  return "ValidationError";
}

const char* name(ComputeKind k) {
  switch (k) {
    case ComputeKind::SearchExhausted: return "SearchExhausted";
    case ComputeKind::FactorizationOverflow: return "FactorizationOverflow";
    case ComputeKind::DegenerateSpecialization: return "DegenerateSpecialization";
    case ComputeKind::DegenerateComposition: return "DegenerateComposition";
    case ComputeKind::NoSuitableAlpha: return "NoSuitableAlpha";
  }
  return "ComputeError";
}

}  // namespace cremona
