#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubeprobe {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DuplicateCoordinate : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// A sampler ran past its draw budget before the estimate finished.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t draws)
      : Error(what), draws_(draws) {}
  std::uint64_t draws() const noexcept { return draws_; }

 private:
  std::uint64_t draws_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

// Fixing a free pair would close a cycle; the subcube has zero mass.
class ContradictionError : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidEncoding : public Error {
 public:
  using Error::Error;
};

class ZeroMassPrefix : public Error {
 public:
  using Error::Error;
};

}  // namespace cubeprobe
