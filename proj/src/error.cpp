#include "lgldpc/error.hpp"

namespace lgldpc {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::unsupported_modulus: return "unsupported-modulus";
    case ErrorCode::unsupported_prime: return "unsupported-prime";
    case ErrorCode::unsupported_degree_profile: return "unsupported-degree-profile";
    case ErrorCode::search_exhausted: return "search-exhausted";
    case ErrorCode::invalid_parameters: return "invalid-parameters";
    case ErrorCode::internal_inconsistency: return "internal-inconsistency";
    case ErrorCode::invalid_plan: return "invalid-plan";
    case ErrorCode::invalid_factor: return "invalid-factor";
    case ErrorCode::invalid_ddp: return "invalid-ddp";
    case ErrorCode::unsupported_ddp: return "unsupported-ddp";
    case ErrorCode::supercritical_epsilon: return "supercritical-epsilon";
    case ErrorCode::girth_budget_exceeded: return "girth-budget-exceeded";
    case ErrorCode::size_limit: return "size-limit";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::validation_error: return "validation-error";
    case ErrorCode::io_error: return "io-error";
  }
  return "unknown";
}

}  // namespace lgldpc
