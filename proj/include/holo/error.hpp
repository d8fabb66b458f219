#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace holo {

/// Malformed polynomial text or input file. Carries the 0-based offset of
/// the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition of a mathematical operation does not hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The operation's hypothesis cannot even be stated for the input
/// (e.g. the shift-coprimality test on an operator with a_0 = 0).
class InapplicableError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A computation ran but produced no mathematically valid answer
/// (no identity found, leading coefficient vanishes, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace holo
