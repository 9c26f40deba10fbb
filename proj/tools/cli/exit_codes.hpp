#pragma once

#include <exception>
#include <stdexcept>
#include <string>

namespace ktau::cli {

// Stable process exit codes. Listed in `ktau --help`.
enum class ExitCode : int {
  ok = 0,
  internal = 1,       // oracle self-check mismatch or unexpected failure
  usage = 2,          // bad flags or arguments
  io = 3,             // file not found, column not found, unparseable cell
  validation = 4,     // length mismatch, fewer than 2 pairs, non-finite value
  degenerate = 5,     // constant column, tau undefined
  not_applicable = 6, // exact method on tied data
};

inline int to_int(ExitCode c) { return static_cast<int>(c); }

/// Failure raised by the CLI layer itself, carrying its exit code.
class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

/// Maps any exception escaping a command to its exit code.
ExitCode exit_code_for(const std::exception& e) noexcept;

/// The exit-code table printed in --help.
const char* exit_code_help();

}  // namespace ktau::cli
