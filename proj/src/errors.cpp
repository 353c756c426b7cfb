#include "fourier_interp/errors.hpp"

namespace fourier_interp {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::ToleranceUnreachable: return "tolerance-unreachable";
    case ErrorKind::NonfiniteIntegrand: return "nonfinite-integrand";
    case ErrorKind::NearPole: return "near-pole";
    case ErrorKind::OutsideRegionS: return "outside-region-S";
    case ErrorKind::RadiusTooLarge: return "radius-too-large";
    case ErrorKind::CannotDeform: return "cannot-deform";
    case ErrorKind::SingularBasis: return "singular-basis";
    case ErrorKind::EnumerationBudgetExceeded: return "enumeration-budget-exceeded";
    case ErrorKind::ShapeMismatch: return "shape-mismatch";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::UnknownFixture: return "unknown-fixture";
  }
  return "unknown";
}

}  // namespace fourier_interp
