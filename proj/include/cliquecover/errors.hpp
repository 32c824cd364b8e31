#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cliquecover {

/// Malformed or out-of-range input. Carries a 1-based line number when the
/// error was found while parsing a text format.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message, std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + message : message),
        line_(line) {}

  std::optional<std::size_t> line() const { return line_; }

 private:
  std::optional<std::size_t> line_;
};

/// A mathematical precondition of a report does not hold (e.g. k_s(G) = 0).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine refused to run because the search space exceeds its cap.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cliquecover
