#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltlearn {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in the textual formula language. Carries the byte offset of
/// the offending token.
class parse_error : public error {
public:
  parse_error(const std::string& message, std::size_t position)
      : error(message + " (at offset " + std::to_string(position) + ")"),
        position(position) {}

  std::size_t position;
};

/// A formula uses an operator outside the fragment expected by an operation.
class fragment_error : public error {
public:
  using error::error;
};

/// Invalid sample: malformed file, foreign letter, empty word, or a word
/// listed both as positive and negative.
class sample_error : public error {
public:
  using error::error;
};

/// A documented precondition of an operation was violated by the caller.
class precondition_error : public error {
public:
  using error::error;
};

/// The requested fragment or input shape has no algorithm in this library.
class unsupported_error : public error {
public:
  using error::error;
};

/// A configurable resource cap (enumeration layer size, oracle ground-set
/// size, search state count) was exceeded.
class resource_limit_error : public error {
public:
  using error::error;
};

}  // namespace ltlearn
