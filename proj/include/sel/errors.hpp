#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sel {

// Bad user-supplied parameters (vertex out of range, c >= n, ...).
class InvalidParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph6 input; `offset` is the byte where parsing failed.
class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Operation refused because the instance exceeds a supported size cap.
class UnsupportedSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configurable resource cap (cycle count, enumeration size) was hit.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sel
