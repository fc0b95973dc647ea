#ifndef DELAYBOUNDS_ERRORS_HPP
#define DELAYBOUNDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace delaybounds {

/// Base class for all library errors.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Interval bounds violate the space preconditions (a >= b, non-integer, ...).
class InvalidInterval : public Error {
  using Error::Error;
};

/// Split point outside the admissible open range of the parent space.
class InvalidSplit : public Error {
  using Error::Error;
};

/// Requested basis order exceeds what the domain can support.
class DegenerateBasis : public Error {
  using Error::Error;
};

/// Operand sizes are inconsistent.
class DimensionMismatch : public Error {
  using Error::Error;
};

/// A square matrix was required.
class NotSquare : public Error {
  using Error::Error;
};

/// Symmetry assumption violated beyond tolerance.
class NotSymmetric : public Error {
  using Error::Error;
};

/// A positive definite matrix was required.
class NotPositiveDefinite : public Error {
  using Error::Error;
};

/// The free-matrix block certificate failed its PSD feasibility test.
class InfeasiblePsi : public Error {
  using Error::Error;
};

/// Basis-change matrix is numerically singular.
class SingularBasisChange : public Error {
  using Error::Error;
};

/// The free vector must be nonzero for this construction.
class ZeroChi : public Error {
  using Error::Error;
};

/// The moment vector must be nonzero for this construction.
class ZeroMoment : public Error {
  using Error::Error;
};

/// Interval ratio alpha outside the guarded range.
class AlphaOutOfRange : public Error {
  using Error::Error;
};

/// Convexifier parameters fail their endpoint feasibility condition.
class InfeasibleParams : public Error {
  using Error::Error;
};

/// Invalid instance or suite configuration.
class InvalidConfig : public Error {
  using Error::Error;
};

/// Suite id not recognized.
class UnknownSuite : public Error {
  using Error::Error;
};

/// Scenario document failed parsing or schema validation.
class ConfigParseError : public Error {
  using Error::Error;
};

}  // namespace delaybounds

#endif
