#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdclub {

/// Raised when a caller breaks an operation's precondition (removing an
/// inactive vertex, passing an infeasible partial solution, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed user input: out-of-range ids, bad instance files, bad flags.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline void expects(bool condition, const char* message) {
  if (!condition) throw ContractViolation(message);
}

}  // namespace kdclub
