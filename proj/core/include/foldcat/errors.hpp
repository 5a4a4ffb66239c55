#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace foldcat {

/// Input text could not be parsed; position() is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t pos)
      : std::runtime_error(message + " (at offset " + std::to_string(pos) + ")"),
        pos_(pos) {}

  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Well-formed input that violates a domain invariant: monotonicity,
/// index range, dimension mismatch, bad starting prefix.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace foldcat
