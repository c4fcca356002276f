#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fanoscape {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mathematical precondition violations. The CLI maps these to exit code 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateHull : public DomainError {
 public:
  using DomainError::DomainError;
};

class OriginNotInterior : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotPointed : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotMutable : public DomainError {
 public:
  using DomainError::DomainError;
};

class WeightMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroWeight : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotQuasismooth : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptyStore : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidArgument : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Problems with files and their contents. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class IoError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : InputError(what), line_(0) {}

  /// 1-based line number, or 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateId : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace fanoscape
