#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace insep {

// Base class for every failure raised by the library. kind() is the stable
// machine-readable tag that also ends up in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define INSEP_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what = #Name) : Error(#Name, what) {} \
  }

INSEP_DEFINE_ERROR(DivisionByZero);
INSEP_DEFINE_ERROR(UnknownVariable);
INSEP_DEFINE_ERROR(InvalidField);
INSEP_DEFINE_ERROR(NotAPthPower);
INSEP_DEFINE_ERROR(NotLocal);
INSEP_DEFINE_ERROR(InvalidPresentation);
INSEP_DEFINE_ERROR(DimensionOverflow);
INSEP_DEFINE_ERROR(InvalidInput);
INSEP_DEFINE_ERROR(DegenerateCase);
INSEP_DEFINE_ERROR(NotIntegral);
INSEP_DEFINE_ERROR(ResourceLimit);
INSEP_DEFINE_ERROR(WrongInvariant);
INSEP_DEFINE_ERROR(UnsupportedP);
INSEP_DEFINE_ERROR(TrivialExtension);
INSEP_DEFINE_ERROR(NotASubalgebra);
INSEP_DEFINE_ERROR(InvariantViolation);

#undef INSEP_DEFINE_ERROR

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("SyntaxError", what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Throws InvariantViolation. Used for postconditions that the library checks
// on its own results; a failure here is a bug, never bad user input.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace insep
