#pragma once

#include <stdexcept>
#include <string>

namespace ssrno {

enum class ErrorCode {
  invalid_argument = 1,
  not_positive_definite,
  shape_mismatch,
  empty_samples,
  non_finite_value,
  parse_error,
  negative_sensitivity,
  degenerate_band,
  rank_deficient,
  grid_mismatch,
  out_of_range,
  invalid_transmittance,
  empty_spectrum,
  feasibility_violation,
  no_convergence,
  io_error,
  format_error,
  truncated_payload,
  patch_too_large,
  non_finite_loss,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

  // Process exit code used by the CLI; distinct per error class.
  int exit_code() const { return static_cast<int>(code_) + 9; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ssrno
