#ifndef ROMPOLY_ERRORS_HPP
#define ROMPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rompoly {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

// Equation has no valid classification (sigma identically zero).
class InvalidEquationError : public Error {
public:
  using Error::Error;
};

// Level index outside the admissible (bound-state) range.
class AdmissibilityError : public Error {
public:
  using Error::Error;
};

// Evaluation at a pole.
class PoleError : public Error {
public:
  using Error::Error;
};

// A denominator factor of a terminating hypergeometric sum vanished.
class PoleInCError : public Error {
public:
  using Error::Error;
};

// The monic construction degenerates (eigenvalue collision).
class ZeroLeadingTermError : public Error {
public:
  using Error::Error;
};

// Integrand returned a non-finite value at an interior node.
class NonFiniteSampleError : public Error {
public:
  using Error::Error;
};

// No real energy root exists.
class ComplexRootError : public Error {
public:
  using Error::Error;
};

// Chosen parameter branch is not admissible.
class InadmissibleError : public Error {
public:
  using Error::Error;
};

} // namespace rompoly

#endif
