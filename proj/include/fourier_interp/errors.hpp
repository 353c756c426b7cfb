#pragma once

#include <stdexcept>
#include <string>

namespace fourier_interp {

enum class ErrorKind {
  InvalidArgument,
  ToleranceUnreachable,
  NonfiniteIntegrand,
  NearPole,
  OutsideRegionS,
  RadiusTooLarge,
  CannotDeform,
  SingularBasis,
  EnumerationBudgetExceeded,
  ShapeMismatch,
  IndexOutOfRange,
  UnknownFixture,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit status without parsing messages.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fourier_interp
