#pragma once

#include <stdexcept>
#include <string>

namespace sitecx {

enum class ErrorCode {
  invalid_input,        // malformed data, schema violations
  ring_mismatch,
  composition_nonzero,  // d_out ∘ d_in ≠ 0
  unknown_object,
  not_composable,
  invalid_site,
  non_commuting_square,
  outside_validity,     // degree requested outside a certified window
  strategy_infeasible,
  non_functorial,
  missing_points,
  missing_fiber_product,
  nonconnective,
  beyond_truncation,
  field_path_mismatch,
  internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace sitecx
