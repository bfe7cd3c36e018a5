#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ftc {

enum class ErrorCode {
  cycle_detected,
  invalid_parameter,
  not_order_preserving,
  mismatched_spaces,
  budget_exceeded,
  not_open,
  not_minimal,
  base_mismatch,
  not_applicable,
  precondition_violated,
  mismatched_sizes,
  not_continuous,
  parse_error,
  io_error,
  internal,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers which contract failed.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace ftc
