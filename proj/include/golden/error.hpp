#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace golden {

enum class ErrorCode {
  invalid_nodes,
  missing_derivative,
  invalid_param,
  out_of_domain,
  degenerate_chord,
  too_few_nodes,
  too_few_ratios,
  too_large,
  no_hilltop,
  axis_cross,
  overlap,
};

// Stable machine-readable name, e.g. "INVALID_NODES".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace golden
