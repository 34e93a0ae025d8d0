#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kgrec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in an input file. Lines and columns are 1-based; column 0
// means "whole line".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column = 0)
      : Error(render(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string render(const std::string& message, std::size_t line, std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    out += ": " + message;
    return out;
  }

  std::size_t line_;
  std::size_t column_;
};

// A value does not conform to its declared datatype, or an operation was
// handed a term of the wrong kind.
class TypeError : public Error {
 public:
  using Error::Error;
};

// Runtime failure while evaluating a rule body or builtin.
class EvalError : public Error {
 public:
  using Error::Error;
};

class NonTerminationError : public Error {
 public:
  explicit NonTerminationError(int rounds)
      : Error("saturation still producing triples after " + std::to_string(rounds) + " rounds"),
        rounds_(rounds) {}

  int rounds() const { return rounds_; }

 private:
  int rounds_;
};

// A recommendation task whose full constraint set admits no solution.
class InconsistentTaskError : public Error {
 public:
  explicit InconsistentTaskError(const std::string& user_id)
      : Error("no consistent recommendation for user " + user_id), user_id_(user_id) {}

  const std::string& user_id() const { return user_id_; }

 private:
  std::string user_id_;
};

// Even removing every preference constraint leaves zero solutions.
class NoDiagnosisError : public Error {
 public:
  using Error::Error;
};

class MissingPreferenceError : public Error {
 public:
  using Error::Error;
};

class UnknownLabelError : public Error {
 public:
  using Error::Error;
};

}  // namespace kgrec
