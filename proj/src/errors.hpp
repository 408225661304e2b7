// Copyright 2026 The Kombi Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace kombi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Applying a non-function, a non-boolean condition, a wrong-shaped extern
// argument. Raised both by evaluators and from inside native callables.
class TypeError : public Error {
 public:
  using Error::Error;
};

class UnboundVarError : public Error {
 public:
  using Error::Error;
};

class UnboundTagError : public Error {
 public:
  explicit UnboundTagError(const std::string& tag)
      : Error("unbound tag '" + tag + "'"), tag_(tag) {}
  const std::string& tag() const { return tag_; }

 private:
  std::string tag_;
};

// Step budget or native stack budget exhausted.
class StepLimitExceeded : public Error {
 public:
  using Error::Error;
};

// A variable or abstraction survived elimination.
class UnexpectedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

class FreeVariableError : public Error {
 public:
  explicit FreeVariableError(std::set<std::string> names)
      : Error(describe(names)), names_(std::move(names)) {}
  const std::set<std::string>& names() const { return names_; }

 private:
  static std::string describe(const std::set<std::string>& names) {
    std::string out = "free variable(s):";
    for (const auto& n : names) out += " " + n;
    return out;
  }
  std::set<std::string> names_;
};

}  // namespace kombi
