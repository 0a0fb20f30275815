#pragma once

/// Numerical thresholds shared across the library. Entropies are in nats.
namespace holevo::tol {

/// Max-entry deviation from Hermiticity accepted before symmetrization.
inline constexpr double hermiticity = 1e-10;
/// Eigenvalues with magnitude up to this are treated as zero.
inline constexpr double psd = 1e-10;
/// Eigensolver reconstruction/orthonormality residual.
inline constexpr double recon = 1e-9;
/// Probability sums and state traces.
inline constexpr double prob = 1e-9;
/// Mass of r outside supp(s) above which D(r||s) is infinite.
inline constexpr double support = 1e-10;
/// Spectrum values below this contribute nothing to S.
inline constexpr double spectrum_floor = 1e-14;
/// Negative entropy results down to -entropy are clipped to zero.
inline constexpr double entropy = 1e-9;
/// Trace distances at or below this count as zero.
inline constexpr double eps_zero = 1e-12;

}  // namespace holevo::tol
