#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrayldpc {

enum class Errc {
  invalid_parameter,
  undefined_input,
  non_invertible,
  evaluation_undefined,
  invalid_moduli,
  singular_system,
  out_of_range,
  invalid_column,
  precondition,
  missing_edge,
  cycle_overflow,
  inference_inconsistent,
  ambiguous_match,
  incomplete_template,
  degenerate_template,
  size_limit,
  parse_error,
};

std::string_view to_string(Errc code) noexcept;

/// Every domain failure in the library is reported as an Error carrying an
/// Errc, so callers (the CLI in particular) can map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace arrayldpc
