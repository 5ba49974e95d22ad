#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pogc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised when an operation would break a Pog invariant (loop, 2-cycle,
// edge and arc on one pair).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// code is one of NotExcellent, NotRound, NotLTT, NotInClass, NotSatisfying,
// NoZeroOutdegreeStart, NotFriendly, InvalidRepresentation, MalformedFormula,
// NoWitness.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string code, const std::string& msg)
      : Error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace pogc
