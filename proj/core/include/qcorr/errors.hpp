#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand dimensions do not agree (state vs. basis, state vs. state, ...).
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, int expected, int got)
      : Error(what + " (expected " + std::to_string(expected) + ", got " +
              std::to_string(got) + ")"),
        expected(expected),
        got(got) {}
  int expected;
  int got;
};

/// A matrix invariant was violated; `violation` is the measured magnitude.
class InvariantViolation : public Error {
 public:
  InvariantViolation(const std::string& what, double violation)
      : Error(what + " (violation " + std::to_string(violation) + ")"),
        violation(violation) {}
  double violation;
};

class NotHermitian : public InvariantViolation {
 public:
  explicit NotHermitian(double v) : InvariantViolation("matrix is not Hermitian", v) {}
};

class TraceNotOne : public InvariantViolation {
 public:
  explicit TraceNotOne(double v) : InvariantViolation("trace differs from one", v) {}
};

class NotPositive : public InvariantViolation {
 public:
  explicit NotPositive(double v)
      : InvariantViolation("matrix has a negative eigenvalue", v) {}
};

class NotNormalized : public InvariantViolation {
 public:
  explicit NotNormalized(double v) : InvariantViolation("vector norm differs from one", v) {}
};

class NotUnitary : public InvariantViolation {
 public:
  explicit NotUnitary(double v) : InvariantViolation("matrix is not unitary", v) {}
};

class NotOrthonormal : public InvariantViolation {
 public:
  explicit NotOrthonormal(double v)
      : InvariantViolation("basis columns are not orthonormal", v) {}
};

class NotBlockDiagonal : public InvariantViolation {
 public:
  explicit NotBlockDiagonal(double v)
      : InvariantViolation("state is not block-diagonal in the measured basis", v) {}
};

class NotPure : public InvariantViolation {
 public:
  explicit NotPure(double v) : InvariantViolation("state purity differs from one", v) {}
};

/// An iterative numerical routine failed to converge.
class ConvergenceFailure : public Error {
 public:
  explicit ConvergenceFailure(const std::string& what) : Error(what) {}
};

class BadLength : public Error {
 public:
  BadLength(const std::string& what, int expected, int got)
      : Error(what + " (expected " + std::to_string(expected) + ", got " +
              std::to_string(got) + ")") {}
};

class BadRank : public Error {
 public:
  BadRank(int dim, int rank)
      : Error("rank must lie in [1, " + std::to_string(dim) + "], got " +
              std::to_string(rank)) {}
};

}  // namespace qcorr
