#ifndef ABNORM_ERRORS_HPP
#define ABNORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abnorm {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonHermitianInput : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised for empty or non-square matrices.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A scalar function is undefined at a requested point, or an entry is not finite.
class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptySubspace : public Error {
 public:
  using Error::Error;
};

class InvalidWeights : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity fell outside a bracket that must hold mathematically.
class PostCheckViolation : public Error {
 public:
  using Error::Error;
};

/// An operator pair does not satisfy the commutation-type hypothesis a bound needs.
class HypothesisViolated : public Error {
 public:
  HypothesisViolated(std::string hypothesis, double residual)
      : Error("hypothesis violated: " + hypothesis + " (residual " + std::to_string(residual) + ")"),
        hypothesis_(std::move(hypothesis)),
        residual_(residual) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }
  double residual() const noexcept { return residual_; }

 private:
  std::string hypothesis_;
  double residual_;
};

}  // namespace abnorm

#endif  // ABNORM_ERRORS_HPP
