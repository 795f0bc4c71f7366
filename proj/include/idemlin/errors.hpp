#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idemlin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (matrix product, vector comparison, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A coefficient of a tropical system has no multiplicative inverse
/// (for example the absorbing infinity of a tropicalized semigroup).
class NonInvertibleEntry : public Error {
 public:
  NonInvertibleEntry(std::size_t unknown, std::size_t equation)
      : Error("coefficient a[" + std::to_string(unknown + 1) + "," + std::to_string(equation + 1) +
              "] has no multiplicative inverse"),
        unknown_(unknown),
        equation_(equation) {}

  std::size_t unknown() const noexcept { return unknown_; }
  std::size_t equation() const noexcept { return equation_; }

 private:
  std::size_t unknown_;
  std::size_t equation_;
};

/// The per-unknown maximum provider reported that W_i has no maximum.
class MaxUndefined : public Error {
 public:
  explicit MaxUndefined(std::size_t unknown)
      : Error("no maximum for the feasible set of unknown " + std::to_string(unknown + 1)),
        unknown_(unknown) {}

  std::size_t unknown() const noexcept { return unknown_; }

 private:
  std::size_t unknown_;
};

class NotCancellative : public Error {
 public:
  NotCancellative() : Error("fraction construction needs a multiplicatively cancellative semiring") {}
};

/// Raised where an incompatible system cannot be reported as a value
/// (the attack, whose target must have been produced by the protocol).
class IncompatibleSystem : public Error {
 public:
  explicit IncompatibleSystem(std::size_t equation)
      : Error("system is incompatible at equation " + std::to_string(equation + 1)),
        equation_(equation) {}

  std::size_t equation() const noexcept { return equation_; }

 private:
  std::size_t equation_;
};

}  // namespace idemlin
