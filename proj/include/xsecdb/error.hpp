#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xsecdb {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Syntax error in a path expression, markup, or a state file. Carries the
/// offset of the offending character.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace xsecdb
