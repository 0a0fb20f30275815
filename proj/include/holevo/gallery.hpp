#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "holevo/ensemble.hpp"
#include "holevo/entropy.hpp"
#include "holevo/errors.hpp"
#include "holevo/linalg.hpp"

namespace holevo {

// ---------------------------------------------------------------------------
// Named ensembles

/// Three equiprobable qubit pure states at 120 degrees on the Bloch circle.
inline DiscreteEnsemble trine_ensemble() {
  const double s = std::sqrt(3.0) / 2.0;
  std::vector<DensityOperator> states;
  states.push_back(DensityOperator::pure(ComplexVector{{1.0, 0.0}}));
  states.push_back(DensityOperator::pure(ComplexVector{{-0.5, s}}));
  states.push_back(DensityOperator::pure(ComplexVector{{-0.5, -s}}));
  return DiscreteEnsemble(ProbabilityVector::uniform(3), std::move(states), {"psi1", "psi2", "psi3"});
}

/// m equiprobable standard-basis pure states in dimension m.
inline DiscreteEnsemble orthogonal_ensemble(long m) {
  if (m < 1) throw ValidationError("orthogonal_ensemble: m must be >= 1");
  std::vector<DensityOperator> states;
  std::vector<std::string> labels;
  for (long k = 0; k < m; ++k) {
    states.push_back(DensityOperator::basis(m, k));
    labels.push_back("|" + std::to_string(k) + ">");
  }
  return DiscreteEnsemble(ProbabilityVector::uniform(static_cast<std::size_t>(m)), std::move(states),
                          std::move(labels));
}

// ---------------------------------------------------------------------------
// Oscillator ensemble {(1 - q) q^n, |n><n|}, q = N / (N + 1)

struct OscillatorEnsembleSpec {
  double mean_photons = 1.0;
  std::optional<long> cutoff;  ///< highest Fock level kept; chosen from tail_tol when unset
  double tail_tol = 1e-12;
};

struct OscillatorEnsemble {
  DiscreteEnsemble ensemble;
  double tail_mass = 0.0;  ///< geometric mass beyond the cutoff, q^(cutoff+1)
  long cutoff = 0;
};

/// Smallest cutoff n with q^(n+1) < tail_tol.
inline long oscillator_auto_cutoff(double mean_photons, double tail_tol) {
  if (!(mean_photons > 0.0)) throw DomainError("oscillator: mean photon number must be > 0");
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw DomainError("oscillator: tail_tol must lie in (0, 1)");
  const double q = mean_photons / (mean_photons + 1.0);
  long n = std::max(0L, static_cast<long>(std::ceil(std::log(tail_tol) / std::log(q))) - 2);
  while (std::pow(q, static_cast<double>(n + 1)) >= tail_tol) ++n;
  while (n > 0 && std::pow(q, static_cast<double>(n)) < tail_tol) --n;
  return n;
}

/// Fock projectors |0>..|cutoff> with the geometric weights renormalized
/// over the kept levels.
inline OscillatorEnsemble oscillator_ensemble(const OscillatorEnsembleSpec& spec) {
  const double nbar = spec.mean_photons;
  if (!(nbar > 0.0) || !std::isfinite(nbar)) {
    throw DomainError("oscillator: mean photon number must be > 0");
  }
  const double q = nbar / (nbar + 1.0);
  long cutoff = 0;
  if (spec.cutoff) {
    cutoff = *spec.cutoff;
    if (cutoff < 0) throw ValidationError("oscillator: cutoff must be >= 0");
    const double tail = std::pow(q, static_cast<double>(cutoff + 1));
    if (tail >= spec.tail_tol) {
      throw ValidationError("oscillator: cutoff " + std::to_string(cutoff) + " leaves tail mass " +
                            std::to_string(tail) + " >= tail_tol " + std::to_string(spec.tail_tol) +
                            "; need cutoff >= " +
                            std::to_string(oscillator_auto_cutoff(nbar, spec.tail_tol)));
    }
  } else {
    cutoff = oscillator_auto_cutoff(nbar, spec.tail_tol);
  }

  const long dim = cutoff + 1;
  std::vector<double> p;
  std::vector<DensityOperator> states;
  std::vector<std::string> labels;
  for (long n = 0; n < dim; ++n) {
    p.push_back((1.0 - q) * std::pow(q, static_cast<double>(n)));
    states.push_back(DensityOperator::basis(dim, n));
    labels.push_back("|" + std::to_string(n) + ">");
  }
  return {DiscreteEnsemble(ProbabilityVector::normalized(std::move(p)), std::move(states), std::move(labels)),
          std::pow(q, static_cast<double>(dim)), cutoff};
}

struct OscillatorClosedForm {
  double chi = 0.0;      ///< g(N)
  double chi_hat = 0.0;  ///< the eps_av H(weights) + hbar bound of the untruncated ensemble
  double a = 0.0;        ///< eps_av = 2q / (1 + q)
  long terms = 0;        ///< series terms summed
};

/// Series evaluation of chi and its eps_av H(weights) + hbar bound for the
/// untruncated oscillator ensemble, with lambda_n = (1 - q) q^n.
///
/// Summation stops once an upper bound on the remaining terms drops below
/// term_tol. For k > n the weight w_k = lambda_k (1 - lambda_k) / a lies in
/// [q lambda_k / a, lambda_k / a], so eta(w_k) <= (lambda_k / a)(-ln(q lambda_k / a)),
/// and lambda_k h(lambda_k) <= ln 2 lambda_k; both tails are geometric sums.
inline OscillatorClosedForm oscillator_closed_form(double mean_photons, double term_tol = 1e-15) {
  if (!(mean_photons > 0.0) || !std::isfinite(mean_photons)) {
    throw DomainError("oscillator: mean photon number must be > 0");
  }
  if (!(term_tol > 0.0)) throw DomainError("oscillator: term_tol must be > 0");
  const double q = mean_photons / (mean_photons + 1.0);
  const double a = 2.0 * q / (1.0 + q);
  const double log_q = std::log(q);

  auto remaining = [&](long n) {
    const double tail = std::pow(q, static_cast<double>(n + 1));  // sum_{k>n} lambda_k
    const double k_tail = tail * (static_cast<double>(n + 1) + q / (1.0 - q));  // sum_{k>n} k lambda_k
    const double entropy_tail =
        tail * (-std::log1p(-q) - log_q + std::log(a)) - log_q * k_tail;
    return entropy_tail + std::numbers::ln2 * tail;
  };

  constexpr long max_terms = 100'000'000;
  double weights_entropy = 0.0;
  double hbar = 0.0;
  long n = 0;
  for (;; ++n) {
    if (n >= max_terms) throw NumericalError("oscillator series did not converge");
    const double lambda = (1.0 - q) * std::pow(q, static_cast<double>(n));
    weights_entropy += eta(std::min(1.0, lambda * (1.0 - lambda) / a));
    hbar += lambda * binary_entropy(1.0 - lambda);
    if (remaining(n) < term_tol) break;
  }
  return {gibbs_g(mean_photons), a * weights_entropy + hbar, a, n + 1};
}

// ---------------------------------------------------------------------------
// Continuous families reduced by finite quadrature

/// A parameterized family of states x -> rho_x sampled on a user-supplied
/// grid with quadrature weights.
template <class Param>
struct ContinuousFamilySpec {
  std::vector<Param> points;
  std::vector<double> weights;
  std::function<DensityOperator(const Param&)> state_at;
};

template <class Param>
DiscreteEnsemble discretize_continuous(const ContinuousFamilySpec<Param>& spec) {
  if (spec.points.empty()) throw ValidationError("continuous family: empty parameter grid");
  if (spec.points.size() != spec.weights.size()) {
    throw ValidationError("continuous family: grid and weight counts differ");
  }
  if (!spec.state_at) throw ValidationError("continuous family: no state map");
  std::vector<DensityOperator> states;
  states.reserve(spec.points.size());
  for (const auto& x : spec.points) states.push_back(spec.state_at(x));
  return DiscreteEnsemble(ProbabilityVector(spec.weights), std::move(states));
}

/// Pure qubit state (I + cos(theta) X + sin(theta) Y) / 2 on the Bloch equator.
inline DensityOperator equatorial_qubit_state(double theta) {
  const ComplexVector psi{{Complex(1.0 / std::sqrt(2.0), 0.0),
                           std::polar(1.0 / std::sqrt(2.0), theta)}};
  return DensityOperator::pure(psi);
}

/// Equator family on an n-point uniform grid with equal weights.
inline ContinuousFamilySpec<double> equatorial_circle_family(std::size_t n) {
  ContinuousFamilySpec<double> spec;
  for (std::size_t k = 0; k < n; ++k) {
    spec.points.push_back(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  }
  spec.weights.assign(n, 1.0 / static_cast<double>(n));
  spec.state_at = equatorial_qubit_state;
  return spec;
}

// ---------------------------------------------------------------------------
// Random states and ensembles (deterministic per seed)

using Rng = std::mt19937_64;

namespace detail {

inline Matrix ginibre(long rows, long cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (long j = 0; j < cols; ++j) {
    for (long i = 0; i < rows; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  }
  return g;
}

inline void check_dim(long dim) {
  if (dim < 1) throw ValidationError("random state: dim must be >= 1");
}

}  // namespace detail

/// Normalized standard complex Gaussian vector.
inline DensityOperator random_pure_state(long dim, Rng& rng) {
  detail::check_dim(dim);
  return DensityOperator::pure(detail::ginibre(dim, 1, rng).col(0));
}

/// G G^H / Tr(G G^H) with G a dim x rank standard complex Gaussian matrix.
inline DensityOperator random_mixed_state(long dim, long rank, Rng& rng) {
  detail::check_dim(dim);
  if (rank < 1 || rank > dim) throw ValidationError("random state: rank must lie in [1, dim]");
  const Matrix g = detail::ginibre(dim, rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(HermitianOperator((rho + rho.adjoint()) / 2.0));
}

/// Haar-random unitary from the QR decomposition of a Ginibre matrix.
inline Matrix random_unitary(long dim, Rng& rng) {
  detail::check_dim(dim);
  const Eigen::HouseholderQR<Matrix> qr(detail::ginibre(dim, dim, rng));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

/// Dirichlet(1, ..., 1) probabilities.
inline ProbabilityVector random_probabilities(std::size_t m, Rng& rng) {
  if (m == 0) throw ValidationError("random probabilities: m must be >= 1");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(m);
  for (double& x : w) x = expo(rng);
  return ProbabilityVector::normalized(std::move(w));
}

/// Dirichlet-random probabilities and Ginibre-random members whose rank is
/// drawn uniformly from 1..dim, so both pure and mixed states occur.
inline DiscreteEnsemble random_ensemble(std::size_t m, long dim, Rng& rng) {
  detail::check_dim(dim);
  ProbabilityVector p = random_probabilities(m, rng);
  std::uniform_int_distribution<long> rank_dist(1, dim);
  std::vector<DensityOperator> states;
  for (std::size_t i = 0; i < m; ++i) {
    const long rank = rank_dist(rng);
    states.push_back(rank == 1 ? random_pure_state(dim, rng) : random_mixed_state(dim, rank, rng));
  }
  return DiscreteEnsemble(std::move(p), std::move(states));
}

/// Equiprobable orbit {U^k rho U^-k}, k = 0..m-1, of a random state under a
/// random unitary with U^m = I. The average commutes with U, so every member
/// sits at the same trace distance from it.
inline DiscreteEnsemble random_covariant_ensemble(std::size_t m, long dim, Rng& rng) {
  detail::check_dim(dim);
  if (m == 0) throw ValidationError("random ensemble: m must be >= 1");
  std::uniform_int_distribution<long> rank_dist(1, dim);
  std::uniform_int_distribution<std::size_t> root_dist(0, m - 1);
  const long rank = rank_dist(rng);
  const DensityOperator seed_state =
      rank == 1 ? random_pure_state(dim, rng) : random_mixed_state(dim, rank, rng);
  const Matrix w = random_unitary(dim, rng);
  ComplexVector phases(dim);
  for (long k = 0; k < dim; ++k) {
    phases(k) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(root_dist(rng)) /
                                    static_cast<double>(m));
  }
  const Matrix u = w * phases.asDiagonal() * w.adjoint();

  std::vector<DensityOperator> states;
  Matrix current = seed_state.matrix();
  for (std::size_t k = 0; k < m; ++k) {
    states.push_back(DensityOperator(HermitianOperator((current + current.adjoint()) / 2.0)));
    current = u * current * u.adjoint();
  }
  return DiscreteEnsemble(ProbabilityVector::uniform(m), std::move(states));
}

inline DensityOperator random_pure_state(long dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure_state(dim, rng);
}

inline DensityOperator random_mixed_state(long dim, long rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_mixed_state(dim, rank, rng);
}

inline DiscreteEnsemble random_ensemble(std::size_t m, long dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_ensemble(m, dim, rng);
}

inline DiscreteEnsemble random_covariant_ensemble(std::size_t m, long dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_covariant_ensemble(m, dim, rng);
}

}  // namespace holevo
