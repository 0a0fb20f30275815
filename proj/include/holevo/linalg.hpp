#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "holevo/errors.hpp"
#include "holevo/tolerances.hpp"

namespace holevo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest absolute entry of a matrix (0 for an empty matrix).
inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Dense complex square matrix known to be exactly Hermitian.
///
/// The public constructor accepts matrices whose anti-Hermitian part is at
/// most tol::hermiticity (relative to the largest entry, floored at 1) and
/// replaces them by (A + A^H)/2. Sums, differences and real multiples of
/// Hermitian matrices stay exactly Hermitian in floating point, so those
/// operations skip validation.
class HermitianOperator {
 public:
  explicit HermitianOperator(const Matrix& m) {
    if (m.rows() < 1 || m.rows() != m.cols()) {
      throw ValidationError("operator must be square with dim >= 1 (got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
    }
    if (!m.allFinite()) throw ValidationError("operator has non-finite entries");
    const double scale = std::max(1.0, max_abs(m));
    const double skew = max_abs(m - m.adjoint());
    if (skew > tol::hermiticity * scale) {
      throw ValidationError("operator is not Hermitian (max |A - A^H| = " + std::to_string(skew) +
                            ")");
    }
    m_ = (m + m.adjoint()) / 2.0;
  }

  static HermitianOperator zero(long dim) { return HermitianOperator(Matrix::Zero(dim, dim), Trusted{}); }

  long dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  double trace() const { return m_.trace().real(); }

  HermitianOperator operator+(const HermitianOperator& o) const {
    check_dims(o);
    return {m_ + o.m_, Trusted{}};
  }
  HermitianOperator operator-(const HermitianOperator& o) const {
    check_dims(o);
    return {m_ - o.m_, Trusted{}};
  }
  HermitianOperator operator*(double s) const { return {m_ * s, Trusted{}}; }
  HermitianOperator operator/(double s) const { return {m_ / s, Trusted{}}; }
  friend HermitianOperator operator*(double s, const HermitianOperator& a) { return a * s; }

 private:
  struct Trusted {};
  HermitianOperator(Matrix m, Trusted) : m_(std::move(m)) {}

  void check_dims(const HermitianOperator& o) const {
    if (dim() != o.dim()) throw DimensionMismatch(dim(), o.dim());
  }

  friend class DensityOperator;

  Matrix m_;
};

/// Eigenvalues in ascending order with the matching orthonormal eigenvectors
/// as columns.
struct EigenSystem {
  RealVector eigenvalues;
  Matrix eigenvectors;
  /// For diagonal input: the row index of the k-th eigenvector's unit entry.
  /// Empty when the general solver was used.
  std::vector<Eigen::Index> diagonal_order;
};

namespace detail {

inline bool is_diagonal(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i != j && m(i, j) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Eigendecomposition of a Hermitian operator. Exactly diagonal inputs are
/// sorted directly; everything else goes through Eigen's self-adjoint solver
/// and is checked for reconstruction and orthonormality.
inline EigenSystem hermitian_eig(const HermitianOperator& a) {
  const Matrix& m = a.matrix();
  const Eigen::Index n = m.rows();
  EigenSystem es;

  if (detail::is_diagonal(m)) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return m(x, x).real() < m(y, y).real(); });
    es.eigenvalues.resize(n);
    es.eigenvectors = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto src = order[static_cast<std::size_t>(k)];
      es.eigenvalues(k) = m(src, src).real();
      es.eigenvectors(src, k) = 1.0;
    }
    es.diagonal_order = std::move(order);
    return es;
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw EigenSolverError(static_cast<long>(n), std::numeric_limits<double>::quiet_NaN());
  }
  es.eigenvalues = solver.eigenvalues();
  es.eigenvectors = solver.eigenvectors();

  const double scale = std::max(1.0, max_abs(m));
  const Matrix& v = es.eigenvectors;
  const double recon =
      max_abs(v * es.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint() - m) / scale;
  const double ortho = max_abs(v.adjoint() * v - Matrix::Identity(n, n));
  const double residual = std::max(recon, ortho);
  if (!(residual <= tol::recon)) throw EigenSolverError(static_cast<long>(n), residual);
  return es;
}

/// Sum of absolute eigenvalues.
inline double trace_norm(const HermitianOperator& a) {
  if (detail::is_diagonal(a.matrix())) return a.matrix().diagonal().real().cwiseAbs().sum();
  return hermitian_eig(a).eigenvalues.cwiseAbs().sum();
}

struct JordanParts {
  HermitianOperator plus;
  HermitianOperator minus;
};

namespace detail {

inline HermitianOperator spectral_part(const EigenSystem& es, bool positive) {
  const Eigen::Index n = es.eigenvalues.size();
  RealVector weights(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lambda = es.eigenvalues(k);
    if (positive) {
      weights(k) = lambda > tol::psd ? lambda : 0.0;
    } else {
      weights(k) = lambda < -tol::psd ? -lambda : 0.0;
    }
  }
  if (!es.diagonal_order.empty()) {
    Matrix part = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto src = es.diagonal_order[static_cast<std::size_t>(k)];
      part(src, src) = weights(k);
    }
    return HermitianOperator(part);
  }
  const Matrix& v = es.eigenvectors;
  Matrix part = v * weights.cast<Complex>().asDiagonal() * v.adjoint();
  // Rounding in the product leaves an anti-Hermitian residue of order 1e-17.
  part = (part + part.adjoint()).eval() / 2.0;
  return HermitianOperator(part);
}

}  // namespace detail

/// Positive and negative parts A = A+ - A- with orthogonal supports.
/// Eigenvalues within tol::psd of zero go to neither part.
inline JordanParts jordan_parts(const HermitianOperator& a) {
  const EigenSystem es = hermitian_eig(a);
  return {detail::spectral_part(es, true), detail::spectral_part(es, false)};
}

/// Positive semidefinite Hermitian operator with unit trace.
class DensityOperator {
 public:
  explicit DensityOperator(const HermitianOperator& op) : op_(op) {
    const double tr = op_.trace();
    if (std::abs(tr - 1.0) > tol::prob) {
      throw ValidationError("state trace is " + std::to_string(tr) + ", expected 1");
    }
    const double min_eig = hermitian_eig(op_).eigenvalues(0);
    if (min_eig < -tol::psd) {
      throw ValidationError("state is not positive semidefinite (min eigenvalue " +
                            std::to_string(min_eig) + ")");
    }
  }

  explicit DensityOperator(const Matrix& m) : DensityOperator(HermitianOperator(m)) {}

  /// Wraps an operator already known to be a state (internal constructions
  /// such as normalized Jordan parts and convex mixtures).
  static DensityOperator unchecked(HermitianOperator op) { return DensityOperator(std::move(op), Trusted{}); }

  /// Projector onto the normalized vector psi.
  static DensityOperator pure(const ComplexVector& psi) {
    const double norm = psi.norm();
    if (psi.size() < 1 || !(norm > 0.0)) throw ValidationError("pure state needs a nonzero vector");
    const ComplexVector u = psi / norm;
    return unchecked(HermitianOperator(Matrix(u * u.adjoint()), HermitianOperator::Trusted{}));
  }

  /// Standard basis projector |k><k| in dimension dim.
  static DensityOperator basis(long dim, long k) {
    if (dim < 1 || k < 0 || k >= dim) throw ValidationError("basis index out of range");
    Matrix m = Matrix::Zero(dim, dim);
    m(k, k) = 1.0;
    return unchecked(HermitianOperator(std::move(m), HermitianOperator::Trusted{}));
  }

  static DensityOperator maximally_mixed(long dim) {
    if (dim < 1) throw ValidationError("dimension must be >= 1");
    return unchecked(HermitianOperator(Matrix(Matrix::Identity(dim, dim) / static_cast<double>(dim)),
                                       HermitianOperator::Trusted{}));
  }

  long dim() const noexcept { return op_.dim(); }
  const HermitianOperator& op() const noexcept { return op_; }
  const Matrix& matrix() const noexcept { return op_.matrix(); }

  /// Eigenvalues ascending with tiny negatives clipped to zero.
  RealVector spectrum() const {
    RealVector ev = hermitian_eig(op_).eigenvalues;
    for (Eigen::Index k = 0; k < ev.size(); ++k) ev(k) = std::max(ev(k), 0.0);
    return ev;
  }

 private:
  struct Trusted {};
  DensityOperator(HermitianOperator op, Trusted) : op_(std::move(op)) {}

  HermitianOperator op_;
};

/// Half the trace norm of r - s, clamped to [0, 1].
inline double trace_distance(const DensityOperator& r, const DensityOperator& s) {
  if (r.dim() != s.dim()) throw DimensionMismatch(r.dim(), s.dim());
  const double d = 0.5 * trace_norm(r.op() - s.op());
  return std::clamp(d, 0.0, 1.0);
}

}  // namespace holevo
