#pragma once

#include <stdexcept>
#include <string>

namespace lindelof {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define LINDELOF_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    using Error::Error;                                               \
    const char* kind() const noexcept override { return #Name; }      \
  };

LINDELOF_DEFINE_ERROR(PoleError)
LINDELOF_DEFINE_ERROR(OverflowError)
LINDELOF_DEFINE_ERROR(DomainError)
LINDELOF_DEFINE_ERROR(RangeError)
LINDELOF_DEFINE_ERROR(IndeterminateError)
LINDELOF_DEFINE_ERROR(ConvergenceError)
LINDELOF_DEFINE_ERROR(ContourError)
LINDELOF_DEFINE_ERROR(FitError)
LINDELOF_DEFINE_ERROR(QuadratureError)
LINDELOF_DEFINE_ERROR(IOError)

#undef LINDELOF_DEFINE_ERROR

}  // namespace lindelof
