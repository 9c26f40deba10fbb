#include "ktau/error.hpp"

namespace ktau {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::too_short: return "too_short";
    case Errc::non_finite: return "non_finite";
    case Errc::degenerate_input: return "degenerate_input";
    case Errc::exact_not_applicable: return "exact_not_applicable";
    case Errc::n_too_large: return "n_too_large";
    case Errc::cutoff_exceeded: return "cutoff_exceeded";
    case Errc::insufficient_sizes: return "insufficient_sizes";
  }
  return "unknown";
}

std::string_view to_string(Variable v) noexcept {
  return v == Variable::x ? "x" : "y";
}

NonFiniteError::NonFiniteError(Variable which, std::size_t index)
    : Error(Errc::non_finite, "non-finite value in " + std::string(to_string(which)) +
                                  " at index " + std::to_string(index)),
      which_(which),
      index_(index) {}

namespace {

std::string degenerate_message(std::optional<Variable> which, const std::string& detail) {
  std::string msg = "degenerate input: ";
  if (which) {
    msg += "all values of " + std::string(to_string(*which)) + " are equal";
  } else {
    msg += "tau is undefined";
  }
  if (!detail.empty()) msg += " (" + detail + ")";
  return msg;
}

}  // namespace

DegenerateError::DegenerateError(std::optional<Variable> which, const std::string& detail)
    : Error(Errc::degenerate_input, degenerate_message(which, detail)), which_(which) {}

}  // namespace ktau
