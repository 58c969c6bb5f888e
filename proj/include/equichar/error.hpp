#pragma once

#include <stdexcept>
#include <string>

namespace equichar {

// Base of every error raised by the library. Each subclass maps to one
// CLI exit code (see tools/equichar.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, missing fields, unknown element literals.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that describes impossible data (bad group table,
// non-faithful rotation, non-integral genus, disconnected curve, ...).
class InvalidData : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class GroupMismatch : public Error {
 public:
  GroupMismatch() : Error("class functions live on different groups") {}
};

// A closed form was requested outside the case it covers.
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

// The Chevalley-Weil multiplicities came out non-integral: the equivariant
// data handed in cannot come from an actual line bundle.
class InconsistentData : public Error {
 public:
  InconsistentData(std::string irreducible, std::string quantity, std::string value)
      : Error("inconsistent equivariant data: " + quantity + " of " + irreducible +
              " is " + value + ", not an integer"),
        irreducible_(std::move(irreducible)),
        quantity_(std::move(quantity)),
        value_(std::move(value)) {}

  const std::string& irreducible() const { return irreducible_; }
  const std::string& quantity() const { return quantity_; }
  const std::string& value() const { return value_; }

 private:
  std::string irreducible_;
  std::string quantity_;
  std::string value_;
};

}  // namespace equichar
