#pragma once

#include <stdexcept>
#include <string>

namespace holevo {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scalar argument outside the function's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(long a, long b)
      : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// Input violates a type invariant (non-Hermitian, not PSD, bad probabilities...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class EigenSolverError : public Error {
 public:
  EigenSolverError(long dim, double residual)
      : Error("hermitian eigensolver failed (dim " + std::to_string(dim) + ", residual " +
              std::to_string(residual) + ")"),
        dim_(dim),
        residual_(residual) {}

  long dim() const noexcept { return dim_; }
  double residual() const noexcept { return residual_; }

 private:
  long dim_;
  double residual_;
};

/// All ensemble members coincide with the average state, so eps_av = 0 and
/// the auxiliary ensembles are undefined.
class DegenerateEnsemble : public Error {
 public:
  DegenerateEnsemble() : Error("degenerate ensemble: every state equals the average state") {}
};

/// Arithmetic on entropy values that has no meaning (infinity minus infinity,
/// a significantly negative entropy).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace holevo
