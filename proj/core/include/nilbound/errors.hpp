#ifndef NILBOUND_ERRORS_HPP
#define NILBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilbound {

/// A computation refused because its input exceeds a configured size guard
/// or search budget.
class GuardExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A constructed object failed to match its own closed-form prediction.
/// Always an implementation bug.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed group or blueprint interchange data.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace nilbound

#endif // NILBOUND_ERRORS_HPP
