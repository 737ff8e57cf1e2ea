#pragma once

#include <stdexcept>
#include <string>

namespace ellcomb {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (x = 0 in a
// theta function, |p| >= 1, negative factorial argument, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Elliptic parameters hit a pole: a guarded theta factor in a denominator
// is (numerically) zero.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

// Two entries of a value sequence that must be distinct coincide (exactly,
// or within the numeric distinctness guard).
class DegenerateSequence : public Error {
 public:
  using Error::Error;
};

// Access outside the declared index window of an explicit sequence.
class WindowError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ellcomb
