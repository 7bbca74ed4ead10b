#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace comblab {

/// Violated precondition or malformed input (CLI exit code 2).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that could not be decoded; `position` is the offending character.
class ParseError : public ArgumentError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ArgumentError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured size or depth bound would be exceeded (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace comblab
