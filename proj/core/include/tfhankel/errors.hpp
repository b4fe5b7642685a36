#pragma once

#include <stdexcept>
#include <string>

namespace tfh {

/// Base of every failure raised by a computation (as opposed to a caller
/// passing malformed arguments, which raises std::invalid_argument).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TFH_DEFINE_ERROR(Name)                            \
  class Name : public ComputationError {                  \
   public:                                                \
    using ComputationError::ComputationError;             \
  }

// algebra
TFH_DEFINE_ERROR(ZeroPolynomial);
// series
TFH_DEFINE_ERROR(OrderTooSmall);
TFH_DEFINE_ERROR(OrderExceeded);
// hankel
TFH_DEFINE_ERROR(InsufficientOrder);
TFH_DEFINE_ERROR(SequenceLost);
TFH_DEFINE_ERROR(DegenerateDeterminant);
TFH_DEFINE_ERROR(TooShort);
// pade
TFH_DEFINE_ERROR(SingularSystem);
TFH_DEFINE_ERROR(PoleEncountered);
// oracle
TFH_DEFINE_ERROR(StepUnderflow);
TFH_DEFINE_ERROR(InvalidBracket);

#undef TFH_DEFINE_ERROR

}  // namespace tfh
