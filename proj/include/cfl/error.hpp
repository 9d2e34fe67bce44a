#pragma once

#include <stdexcept>
#include <string>

namespace cfl {

// Numeric values are mirrored by the cfl_status enum of the C API.
enum class ErrorCode : int {
  invalid_argument = 1,
  dimension_mismatch = 2,
  out_of_range = 3,
  budget_exceeded = 4,
  mixed_kinds = 5,
  not_isometry = 6,
  not_spanning = 7,
  unknown_group = 8,
  cache_missing = 9,
  cache_corrupt = 10,
  parse_error = 11,
  not_invariant = 12,
  inconsistent = 13,
  io_error = 14,
  unsupported = 15,
  verdict_disagreement = 16,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code) noexcept;

}  // namespace cfl
