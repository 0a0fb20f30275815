#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "holevo/errors.hpp"
#include "holevo/linalg.hpp"
#include "holevo/tolerances.hpp"

namespace holevo {

/// Entropy-like quantity in nats. May hold +infinity; finite values are
/// nonnegative (results in [-tol::entropy, 0) are clipped to zero).
class EntropyValue {
 public:
  constexpr EntropyValue() = default;

  explicit EntropyValue(double v) : v_(v) {
    if (std::isnan(v)) throw NumericalError("entropy value is NaN");
    if (v < 0.0) {
      if (v < -tol::entropy) {
        throw NumericalError("entropy value " + std::to_string(v) + " is negative");
      }
      v_ = 0.0;
    }
  }

  static EntropyValue infinity() {
    EntropyValue e;
    e.v_ = std::numeric_limits<double>::infinity();
    return e;
  }

  bool is_finite() const noexcept { return std::isfinite(v_); }
  double value() const noexcept { return v_; }
  explicit operator double() const noexcept { return v_; }

  friend EntropyValue operator+(EntropyValue a, EntropyValue b) { return EntropyValue(a.v_ + b.v_); }

  /// Signed difference; infinity minus a finite value stays infinite,
  /// infinity minus infinity is an error.
  friend double operator-(EntropyValue a, EntropyValue b) {
    if (!a.is_finite() && !b.is_finite()) throw NumericalError("infinity minus infinity");
    return a.v_ - b.v_;
  }

  friend bool operator==(EntropyValue, EntropyValue) = default;

 private:
  double v_ = 0.0;
};

/// Nonnegative weights summing to one within tol::prob.
class ProbabilityVector {
 public:
  ProbabilityVector() = default;

  explicit ProbabilityVector(std::vector<double> w) : w_(std::move(w)) {
    if (w_.empty()) throw ValidationError("probability vector is empty");
    double sum = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (!std::isfinite(w_[i]) || w_[i] < 0.0) {
        throw ValidationError("probability " + std::to_string(i) + " is negative or not finite");
      }
      sum += w_[i];
    }
    if (std::abs(sum - 1.0) > tol::prob) {
      throw ValidationError("probabilities sum to " + std::to_string(sum) + ", expected 1");
    }
  }

  static ProbabilityVector uniform(std::size_t m) {
    if (m == 0) throw ValidationError("probability vector is empty");
    return ProbabilityVector(std::vector<double>(m, 1.0 / static_cast<double>(m)));
  }

  /// Divides nonnegative weights by their sum.
  static ProbabilityVector normalized(std::vector<double> w) {
    double sum = 0.0;
    for (double x : w) sum += x;
    if (!(sum > 0.0)) throw ValidationError("cannot normalize weights with zero sum");
    for (double& x : w) x /= sum;
    return ProbabilityVector(std::move(w));
  }

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  const std::vector<double>& weights() const noexcept { return w_; }
  auto begin() const noexcept { return w_.begin(); }
  auto end() const noexcept { return w_.end(); }

 private:
  std::vector<double> w_;
};

/// eta(x) = -x ln x with eta(0) = 0.
inline double eta(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("eta: argument " + std::to_string(x) + " outside [0, 1]");
  return x == 0.0 ? 0.0 : -x * std::log(x);
}

/// h(p) = eta(p) + eta(1 - p).
inline double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("binary_entropy: argument " + std::to_string(p) + " outside [0, 1]");
  }
  return eta(p) + eta(1.0 - p);
}

inline EntropyValue shannon_entropy(const ProbabilityVector& p) {
  double s = 0.0;
  for (double x : p) s += eta(std::min(x, 1.0));
  return EntropyValue(s);
}

/// Entropy of an eigenvalue list; negatives up to tol::psd count as zero.
inline EntropyValue spectral_entropy(const RealVector& spectrum) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < spectrum.size(); ++k) {
    const double x = std::clamp(spectrum(k), 0.0, 1.0);
    if (x >= tol::spectrum_floor) s += eta(x);
  }
  return EntropyValue(s);
}

inline EntropyValue von_neumann_entropy(const DensityOperator& r) {
  return spectral_entropy(r.spectrum());
}

/// Quantum relative entropy D(r||s) = Tr r (ln r - ln s), evaluated in the
/// eigenbasis of s. Infinite when r puts more than tol::support mass on the
/// kernel of s.
inline EntropyValue relative_entropy(const DensityOperator& r, const DensityOperator& s) {
  if (r.dim() != s.dim()) throw DimensionMismatch(r.dim(), s.dim());
  const EigenSystem es = hermitian_eig(s.op());
  const Matrix& w = es.eigenvectors;
  // Diagonal of W^H r W: the weight r places on each eigenvector of s.
  const Matrix rw = r.matrix() * w;
  double kernel_mass = 0.0;
  double cross = 0.0;
  for (Eigen::Index k = 0; k < w.cols(); ++k) {
    const double weight = std::max(0.0, w.col(k).dot(rw.col(k)).real());
    const double mu = es.eigenvalues(k);
    if (mu <= tol::psd) {
      kernel_mass += weight;
    } else {
      cross -= weight * std::log(mu);
    }
  }
  if (kernel_mass > tol::support) return EntropyValue::infinity();
  return EntropyValue(cross - von_neumann_entropy(r).value());
}

/// Entropy of the Gibbs oscillator state with mean photon number n:
/// g(n) = (n + 1) ln(n + 1) - n ln n.
inline double gibbs_g(double n) {
  if (!(n >= 0.0) || !std::isfinite(n)) throw DomainError("gibbs_g: argument must be >= 0");
  if (n == 0.0) return 0.0;
  return (n + 1.0) * std::log1p(n) - n * std::log(n);
}

}  // namespace holevo
