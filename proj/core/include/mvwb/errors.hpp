#pragma once

#include <stdexcept>
#include <string>

namespace mvwb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define MVWB_ERROR(Name)                          \
  struct Name : Error {                           \
    explicit Name(const std::string& msg = #Name) \
        : Error(std::string(#Name) + ": " + msg) {}   \
  }

MVWB_ERROR(BadDimensions);
MVWB_ERROR(NotDominated);
MVWB_ERROR(SizeMismatch);
MVWB_ERROR(ZeroDenominator);
MVWB_ERROR(IndeterminateComparison);
MVWB_ERROR(IndexOutOfRange);
MVWB_ERROR(SingularPrincipalMinor);
MVWB_ERROR(ShapeViolation);
MVWB_ERROR(NotInSlice);
MVWB_ERROR(OrderTooLarge);
MVWB_ERROR(NotABasis);
MVWB_ERROR(NotNilpotent);
MVWB_ERROR(NotFactorizable);
MVWB_ERROR(BoxViolation);
MVWB_ERROR(NotMember);
MVWB_ERROR(NotAFlag);
MVWB_ERROR(AlphabetMismatch);
MVWB_ERROR(NotOvershadowing);
MVWB_ERROR(TooLarge);
MVWB_ERROR(ConventionMismatch);

#undef MVWB_ERROR

}  // namespace mvwb
