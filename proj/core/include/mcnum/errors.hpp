#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcnum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 text or coloring file. Carries the byte offset of the
/// first offending byte.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnsupportedSizeError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (disconnected input, empty
/// graph, mismatched vertex counts, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidEdgeError : public Error {
 public:
  using Error::Error;
};

/// Search budget exhausted. Never accompanied by a partial answer.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class InvalidWitnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcnum
