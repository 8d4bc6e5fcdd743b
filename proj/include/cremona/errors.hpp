#ifndef CREMONA_ERRORS_HPP
#define CREMONA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cremona {

// Validation failures: malformed input or a violated precondition.
// The CLI maps these to exit code 2.
enum class ValidationKind {
  FieldMismatch,
  DomainMismatch,
  ArityMismatch,
  DimensionMismatch,
  DivisionByZero,
  ZeroTuple,
  MissingInverse,
  NotFixed,
  IndeterminateAtPoint,
  NotLocalIso,
  InvalidParameter,
  DeterminantNotOne,
  SizeMismatch,
  UnsupportedFieldSize,
  UnsupportedField,
  ParseError,
};

// Computational failures: a well-formed request the engine cannot complete.
// The CLI maps these to exit code 3.
enum class ComputeKind {
  SearchExhausted,
  FactorizationOverflow,
  DegenerateSpecialization,
  DegenerateComposition,
  NoSuitableAlpha,
};

const char* name(ValidationKind k);
const char* name(ComputeKind k);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationKind k, const std::string& msg)
      : std::runtime_error(std::string(name(k)) + ": " + msg), kind_(k) {}
  ValidationKind kind() const { return kind_; }

 private:
  ValidationKind kind_;
};

class ComputeError : public std::runtime_error {
 public:
  ComputeError(ComputeKind k, const std::string& msg)
      : std::runtime_error(std::string(name(k)) + ": " + msg), kind_(k) {}
  ComputeKind kind() const { return kind_; }

 private:
  ComputeKind kind_;
};

}  // namespace cremona

#endif
