#include "galmod/error.hpp"

namespace galmod {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGroup: return "invalid-group";
    case ErrorCode::InvalidElement: return "invalid-element";
    case ErrorCode::InvalidTwist: return "invalid-twist";
    case ErrorCode::Conductor: return "conductor";
    case ErrorCode::InvalidAutomorphism: return "invalid-automorphism";
    case ErrorCode::NotARoot: return "not-a-root";
    case ErrorCode::Parity: return "parity";
    case ErrorCode::InvalidFiltration: return "invalid-filtration";
    case ErrorCode::SingularResolvend: return "singular-resolvend";
    case ErrorCode::CoefficientDomain: return "coefficient-domain";
    case ErrorCode::NotGaloisOrbit: return "not-a-galois-orbit";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Equivariance: return "equivariance";
    case ErrorCode::Tameness: return "tameness";
    case ErrorCode::OddOrder: return "odd-order-violation";
    case ErrorCode::NotAGenerator: return "not-a-generator";
    case ErrorCode::SearchFailure: return "search-failure";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Order: return "order";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace galmod
