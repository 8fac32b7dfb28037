#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freehopf {

/// Malformed text or JSON input. Carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what), position_(0) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operation undefined on its inputs (alphabet mismatch, missing antipode, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The exploration window was too small to certify a result.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace freehopf
