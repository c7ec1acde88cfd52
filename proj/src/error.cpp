#include "arrayldpc/error.hpp"

namespace arrayldpc {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::undefined_input: return "undefined-input";
    case Errc::non_invertible: return "non-invertible";
    case Errc::evaluation_undefined: return "evaluation-undefined";
    case Errc::invalid_moduli: return "invalid-moduli";
    case Errc::singular_system: return "singular-system";
    case Errc::out_of_range: return "out-of-range";
    case Errc::invalid_column: return "not-a-valid-column";
    case Errc::precondition: return "precondition";
    case Errc::missing_edge: return "missing-edge";
    case Errc::cycle_overflow: return "cycle-overflow";
    case Errc::inference_inconsistent: return "inference-inconsistent";
    case Errc::ambiguous_match: return "ambiguous-match";
    case Errc::incomplete_template: return "incomplete-template";
    case Errc::degenerate_template: return "degenerate-template";
    case Errc::size_limit: return "size-limit";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace arrayldpc
