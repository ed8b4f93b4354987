#pragma once

#include <stdexcept>
#include <string>

namespace seedlearn {

/// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured size cap (table width, class size, retries) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A teacher answered outside the equivalence-query protocol.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Learner state reached a configuration its invariants rule out.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace seedlearn
