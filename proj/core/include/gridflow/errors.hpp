#pragma once

#include <stdexcept>
#include <string>

namespace gridflow {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- linear algebra -------------------------------------------------------

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(int pivot_index, double pivot)
      : Error("singular matrix: pivot " + std::to_string(pivot_index) +
              " has magnitude " + std::to_string(pivot)),
        pivot_index(pivot_index) {}
  int pivot_index;
};

class NotPositiveDefiniteError : public Error {
 public:
  explicit NotPositiveDefiniteError(int row)
      : Error("matrix is not positive definite (failure at row " +
              std::to_string(row) + ")"),
        row(row) {}
  int row;
};

class NonFiniteError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// ---- random variates ------------------------------------------------------

class BadParameterError : public Error {
 public:
  using Error::Error;
};

// ---- case parsing ---------------------------------------------------------

enum class ParseErrorCode {
  MissingBlock,
  DuplicateBusId,
  NoSlackBus,
  MultipleSlackBuses,
  MalformedRow,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorCode code, std::string message, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : std::move(message)),
        code(code),
        line(line) {}
  ParseErrorCode code;
  int line;  // 1-based, 0 when not tied to a specific line
};

class ZeroImpedanceBranchError : public Error {
 public:
  explicit ZeroImpedanceBranchError(int branch_index)
      : Error("branch " + std::to_string(branch_index) +
              " has zero series impedance"),
        branch_index(branch_index) {}
  int branch_index;
};

// ---- power flow -----------------------------------------------------------

class DivergedError : public Error {
 public:
  DivergedError(int iterations, double mismatch)
      : Error("power flow diverged after " + std::to_string(iterations) +
              " iterations (mismatch " + std::to_string(mismatch) + ")"),
        iterations(iterations),
        mismatch(mismatch) {}
  int iterations;
  double mismatch;
};

class SingularJacobianError : public Error {
 public:
  using Error::Error;
};

// ---- regression / training ------------------------------------------------

class SingularSystemError : public Error {
 public:
  using Error::Error;
};

class MissingContextError : public Error {
 public:
  using Error::Error;
};

class NonFiniteLossError : public Error {
 public:
  NonFiniteLossError(int epoch, int batch)
      : Error("non-finite training loss at epoch " + std::to_string(epoch) +
              ", batch " + std::to_string(batch)),
        epoch(epoch),
        batch(batch) {}
  int epoch;
  int batch;
};

class CorruptCheckpointError : public Error {
 public:
  using Error::Error;
};

class VersionMismatchError : public Error {
 public:
  using Error::Error;
};

// ---- scenario sampling / statistics ----------------------------------------

class BadSpecError : public Error {
 public:
  using Error::Error;
};

class CovarianceNotPsdError : public Error {
 public:
  using Error::Error;
};

class TooManyDivergencesError : public Error {
 public:
  TooManyDivergencesError(int dropped, int requested)
      : Error(std::to_string(dropped) + " of " + std::to_string(requested) +
              " samples failed to converge"),
        dropped(dropped),
        requested(requested) {}
  int dropped;
  int requested;
};

class AllTargetsNearZeroError : public Error {
 public:
  using Error::Error;
};

class NoSamplesError : public Error {
 public:
  using Error::Error;
};

class DegenerateSamplesError : public Error {
 public:
  using Error::Error;
};

}  // namespace gridflow
