#pragma once

#include <stdexcept>
#include <string>

namespace lgldpc {

// Error vocabulary shared by the C++ core, the C API status codes and the
// CLI exit-code mapping. Names are kebab-cased in messages and JSON.
enum class ErrorCode {
  invalid_argument = 1,
  unsupported_modulus,
  unsupported_prime,
  unsupported_degree_profile,
  search_exhausted,
  invalid_parameters,
  internal_inconsistency,
  invalid_plan,
  invalid_factor,
  invalid_ddp,
  unsupported_ddp,
  supercritical_epsilon,
  girth_budget_exceeded,
  size_limit,
  parse_error,
  validation_error,
  io_error,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace lgldpc
