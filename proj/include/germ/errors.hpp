#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germ {

/// Operands live in different rings.
class ContextMismatch : public std::invalid_argument {
 public:
  ContextMismatch() : std::invalid_argument("polynomials belong to different rings") {}
};

/// A precondition on the mathematical input failed (zero polynomial, unit germ, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Expression text could not be parsed. `position` is a 0-based byte offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A search bound was exhausted where a proved result guarantees success.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A runtime check of a proved statement failed; always an engine bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace germ
