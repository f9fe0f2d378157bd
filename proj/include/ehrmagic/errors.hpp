#pragma once

#include <stdexcept>
#include <string>

namespace ehrmagic {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

class ZeroDilation : public Error {
 public:
  ZeroDilation() : Error("dilation factor must be nonzero") {}
};

class NonPositiveCoefficients : public Error {
 public:
  NonPositiveCoefficients()
      : Error("polynomial must have strictly positive coefficients") {}
};

class InvalidParameters : public Error {
 public:
  explicit InvalidParameters(const std::string& what)
      : Error("invalid parameters: " + what) {}
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& what) : Error("enumeration too large: " + what) {}
};

class UnsupportedGeneric : public Error {
 public:
  UnsupportedGeneric() : Error("lattice enumeration needs a polytope family, not a generic polynomial") {}
};

class NegativeInput : public Error {
 public:
  NegativeInput() : Error("input must be non-negative") {}
};

class NotCL : public Error {
 public:
  NotCL() : Error("polynomial does not have all roots on Re(z) = -1/2") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error("parse error at " + std::to_string(pos) + ": " + what), position(pos) {}
  std::size_t position;
};

}  // namespace ehrmagic
