#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ktau {

enum class Errc {
  length_mismatch,
  too_short,
  non_finite,
  degenerate_input,
  exact_not_applicable,
  n_too_large,
  cutoff_exceeded,
  insufficient_sizes,
};

std::string_view to_string(Errc code) noexcept;

/// Names one side of a paired sample.
enum class Variable { x, y };

std::string_view to_string(Variable v) noexcept;

/// Base error for every failure raised by the library. The code is stable and
/// is what callers (the CLI in particular) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class NonFiniteError : public Error {
 public:
  NonFiniteError(Variable which, std::size_t index);

  Variable which() const noexcept { return which_; }
  std::size_t index() const noexcept { return index_; }

 private:
  Variable which_;
  std::size_t index_;
};

/// A constant vector (or a vanishing null variance) leaves tau undefined.
/// `which()` is empty when the cause cannot be pinned to one side.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(std::optional<Variable> which, const std::string& detail = {});

  std::optional<Variable> which() const noexcept { return which_; }

 private:
  std::optional<Variable> which_;
};

}  // namespace ktau
