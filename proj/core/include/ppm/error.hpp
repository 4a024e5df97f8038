#pragma once

#include <stdexcept>
#include <string>

namespace ppm {

enum class ErrorKind {
  DivisionByZero,
  OrderMismatch,
  Parse,
  NonSurjective,
  ParityViolation,
  LoadAssertion,
  CutoffTooSmall,
  IntertwiningFailure,
  TwistedProductUnsupported,
  NonDiagonal,
  PotentialMismatch,
  ShapeMismatch,
  NoLiftAtCutoff,
  NotClosed,
  Inconsistent,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}
  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace ppm
