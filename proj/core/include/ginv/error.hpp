#pragma once

#include <stdexcept>
#include <string>

namespace ginv {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible for the requested operation.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Inverse or resolvent requested for a matrix with zero determinant.
class SingularMatrixError : public Error {
public:
  using Error::Error;
};

/// Group or core inverse requested for a matrix of index two or more.
class IndexError : public Error {
public:
  using Error::Error;
};

/// A construction failed its own postcondition check. Always a bug.
class InternalInconsistencyError : public Error {
public:
  using Error::Error;
};

/// An equivalence that must hold for every admissible input did not.
class TheoremFalsificationError : public Error {
public:
  using Error::Error;
};

/// Random generation gave up after the configured number of retries.
class GenerationExhaustedError : public Error {
public:
  using Error::Error;
};

/// The requested random object cannot exist for the given input.
class ImpossibleRequestError : public Error {
public:
  using Error::Error;
};

}  // namespace ginv
