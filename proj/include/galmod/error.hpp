#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galmod {

enum class ErrorCode {
  InvalidGroup,
  InvalidElement,
  InvalidTwist,
  Conductor,
  InvalidAutomorphism,
  NotARoot,
  Parity,
  InvalidFiltration,
  SingularResolvend,
  CoefficientDomain,
  NotGaloisOrbit,
  Domain,
  Equivariance,
  Tameness,
  OddOrder,
  NotAGenerator,
  SearchFailure,
  Precondition,
  Order,
  Parse,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace galmod
