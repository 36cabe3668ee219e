#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypersim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(std::move(reason)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class UnknownBuiltin : public Error {
 public:
  explicit UnknownBuiltin(const std::string& name)
      : Error("unknown builtin machine '" + name + "'") {}
};

class NotAnEncoding : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class InsufficientTape : public Error {
 public:
  using Error::Error;
};

class MismatchedJunction : public Error {
 public:
  using Error::Error;
};

}  // namespace hypersim
