#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnfix {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A size guard (in-degree cap, cycle cap, enumeration limit) was exceeded.
/// Guards never truncate silently; callers get this instead.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// A vertex set handed to an algorithm violates its contract
/// (not an FVS, not a PFVS, P not contained in F, index out of range).
class InvalidSetError : public Error {
public:
  using Error::Error;
};

/// A schedule is not a permutation, or not compatible with (F, P).
class InvalidScheduleError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class SyntaxError : public ParseError {
public:
  using ParseError::ParseError;
};

class UndefinedIdentifierError : public ParseError {
public:
  UndefinedIdentifierError(const std::string& name, std::size_t line, std::size_t column)
      : ParseError("line " + std::to_string(line) + ":" + std::to_string(column) +
                       ": undefined identifier '" + name + "'",
                   line, column),
        name_(name) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class DuplicateDefinitionError : public ParseError {
public:
  DuplicateDefinitionError(const std::string& name, std::size_t line, std::size_t first_line)
      : ParseError("line " + std::to_string(line) + ": duplicate definition of '" + name +
                       "' (first defined on line " + std::to_string(first_line) + ")",
                   line, 1),
        name_(name) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

} // namespace bnfix
