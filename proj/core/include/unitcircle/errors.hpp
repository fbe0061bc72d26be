#pragma once

#include <stdexcept>
#include <string>

namespace unitcircle {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class NonzeroRemainder : public Error {
 public:
  NonzeroRemainder() : Error("divisor does not divide the dividend exactly") {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

class InvalidInterval : public Error {
 public:
  explicit InvalidInterval(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class ToleranceNotReached : public Error {
 public:
  explicit ToleranceNotReached(const std::string& what) : Error(what) {}
};

class NotReciprocal : public Error {
 public:
  NotReciprocal() : Error("polynomial is neither palindromic nor anti-palindromic") {}
};

class BadGammaVector : public Error {
 public:
  explicit BadGammaVector(const std::string& what) : Error(what) {}
};

class DegenerateDenominator : public Error {
 public:
  explicit DegenerateDenominator(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace unitcircle
