#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace clifun {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: invalid signature, mismatched algebras, grade out of range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

// A function was requested outside its domain (log at eigenvalue 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularMultivectorError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The spectrum has repeated roots; the per-root formulas are singular.
class DegenerateSpectrumError : public Error {
 public:
  using Error::Error;
};

// Imaginary residue after summing conjugate roots exceeds the bound.
class RealificationError : public Error {
 public:
  RealificationError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class RegularizationError : public Error {
 public:
  using Error::Error;
};

// Cross-checks between independent computations disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class RootFindingError : public Error {
 public:
  RootFindingError(const std::string& what,
                   std::vector<std::complex<double>> best)
      : Error(what), best_(std::move(best)) {}
  const std::vector<std::complex<double>>& best_iterates() const noexcept {
    return best_;
  }

 private:
  std::vector<std::complex<double>> best_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace clifun
