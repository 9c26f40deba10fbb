#include "cli/exit_codes.hpp"

#include "ktau/error.hpp"

namespace ktau::cli {

ExitCode exit_code_for(const std::exception& e) noexcept {
  if (const auto* cli = dynamic_cast<const CliError*>(&e)) return cli->code();
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    switch (err->code()) {
      case Errc::length_mismatch:
      case Errc::too_short:
      case Errc::non_finite: return ExitCode::validation;
      case Errc::degenerate_input: return ExitCode::degenerate;
      case Errc::exact_not_applicable: return ExitCode::not_applicable;
      case Errc::n_too_large:
      case Errc::cutoff_exceeded:
      case Errc::insufficient_sizes: return ExitCode::usage;
    }
  }
  if (dynamic_cast<const std::invalid_argument*>(&e)) return ExitCode::usage;
  return ExitCode::internal;
}

const char* exit_code_help() {
  return "Exit codes:\n"
         "  0  success\n"
         "  1  internal error (including an oracle self-check mismatch)\n"
         "  2  usage error\n"
         "  3  parse or I/O error (missing file, unknown column, bad cell)\n"
         "  4  validation error (length mismatch, fewer than 2 pairs, non-finite value)\n"
         "  5  degenerate input (constant column)\n"
         "  6  method not applicable (exact test on tied data)\n";
}

}  // namespace ktau::cli
