#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace octgi {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mixed group ranks or algebra dimensions.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// Syntax error with a byte offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), pos(pos) {}
  std::size_t pos;
};

/// Precondition violation on otherwise well-formed input.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Invariant breach inside the library; maps to exit code 3 in the CLI.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace octgi
