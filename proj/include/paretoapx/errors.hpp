#ifndef PARETOAPX_ERRORS_HPP
#define PARETOAPX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paretoapx {

/// Malformed instance text. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An enumeration would exceed its configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algorithm precondition that depends on an oracle or input promise failed.
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested operation is not supported by this backend (e.g. exact answers).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Guard value, raised (never lowered) by the PARETO_GUARD_MAX environment variable.
std::size_t effective_guard(std::size_t default_guard);

}  // namespace paretoapx

#endif
