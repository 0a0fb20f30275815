#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holevo/ensemble.hpp"
#include "holevo/entropy.hpp"
#include "holevo/linalg.hpp"

namespace holevo {

/// Both sides of S(r) + eps S(tau-) <= S(s) + eps S(tau+) + h(eps), where
/// eps is the trace distance and tau+- the normalized Jordan parts of r - s.
struct FeiReport {
  double eps = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  ///< rhs - lhs
};

inline FeiReport fei_check(const DensityOperator& r, const DensityOperator& s) {
  if (r.dim() != s.dim()) throw DimensionMismatch(r.dim(), s.dim());
  const double s_r = von_neumann_entropy(r).value();
  const EigenSystem es = hermitian_eig(r.op() - s.op());
  const double eps = std::clamp(0.5 * es.eigenvalues.cwiseAbs().sum(), 0.0, 1.0);
  FeiReport out;
  out.eps = eps;
  if (eps <= tol::eps_zero) {
    out.lhs = out.rhs = s_r;
    return out;
  }
  const auto tau_plus = DensityOperator::unchecked(detail::spectral_part(es, true) / eps);
  const auto tau_minus = DensityOperator::unchecked(detail::spectral_part(es, false) / eps);
  out.lhs = s_r + eps * von_neumann_entropy(tau_minus).value();
  out.rhs = von_neumann_entropy(s).value() + eps * von_neumann_entropy(tau_plus).value() +
            binary_entropy(eps);
  out.slack = out.rhs - out.lhs;
  return out;
}

/// A bound together with the variant whose binary-entropy term hbar(mu) is
/// replaced by h(eps_av). `first <= second` by concavity of h.
struct BoundPair {
  double first = 0.0;
  double second = 0.0;
};

namespace detail {

inline double h_of_average(const AuxiliaryDecomposition& aux) { return binary_entropy(aux.eps_av); }

inline double hbar_of(const DiscreteEnsemble& mu, const AuxiliaryDecomposition& aux) {
  double s = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += mu.probs()[i] * binary_entropy(aux.eps[i]);
  return s;
}

}  // namespace detail

/// eps_av (chi(mu+) - chi(mu-)) + hbar(mu), and the h(eps_av) variant.
inline BoundPair theorem1_bound(const DiscreteEnsemble& mu, const AuxiliaryDecomposition& aux) {
  const double core = aux.eps_av * (holevo_chi(aux.mu_plus) - holevo_chi(aux.mu_minus));
  return {core + detail::hbar_of(mu, aux), core + detail::h_of_average(aux)};
}

inline BoundPair theorem1_bound(const DiscreteEnsemble& mu) {
  try {
    return theorem1_bound(mu, build_auxiliary(mu));
  } catch (const DegenerateEnsemble&) {
    return {};
  }
}

/// eps_av H({p_i eps_i / eps_av}) + hbar(mu), and the h(eps_av) variant.
inline BoundPair prop1_bound(const DiscreteEnsemble& mu, const AuxiliaryDecomposition& aux) {
  const double core = aux.eps_av * shannon_entropy(aux.weights()).value();
  return {core + detail::hbar_of(mu, aux), core + detail::h_of_average(aux)};
}

inline BoundPair prop1_bound(const DiscreteEnsemble& mu) {
  try {
    return prop1_bound(mu, build_auxiliary(mu));
  } catch (const DegenerateEnsemble&) {
    return {};
  }
}

/// eps_av ln m + hbar(mu), and the h(eps_av) variant, m the member count.
inline BoundPair corollary1_bound(const DiscreteEnsemble& mu) {
  const MemberEpsilons e = member_epsilons(mu);
  if (e.eps_av <= tol::eps_zero) return {};
  double hbar = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) hbar += mu.probs()[i] * binary_entropy(e.eps[i]);
  const double core = e.eps_av * std::log(static_cast<double>(mu.size()));
  return {core + hbar, core + binary_entropy(e.eps_av)};
}

/// C(mu): the largest trace distance between two of the tau_i+.
inline double c_mu(const AuxiliaryDecomposition& aux) {
  double c = 0.0;
  const auto& tp = aux.tau_plus();
  if (std::all_of(tp.begin(), tp.end(), [](const DensityOperator& t) { return detail::is_diagonal(t.matrix()); })) {
    // Diagonal members (Fock-type ensembles): compare the diagonals only.
    std::vector<RealVector> diag;
    for (const auto& t : tp) diag.push_back(t.matrix().diagonal().real());
    for (std::size_t i = 0; i < diag.size(); ++i) {
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        c = std::max(c, std::min(1.0, 0.5 * (diag[i] - diag[j]).cwiseAbs().sum()));
      }
    }
    return c;
  }
  for (std::size_t i = 0; i < tp.size(); ++i) {
    for (std::size_t j = i + 1; j < tp.size(); ++j) c = std::max(c, trace_distance(tp[i], tp[j]));
  }
  return c;
}

namespace detail {

inline double pinsker_sum(const AuxiliaryDecomposition& aux, const std::vector<double>& weight) {
  double d = 0.0;
  for (std::size_t k = 0; k < aux.tau_minus().size(); ++k) {
    const double norm = trace_norm(aux.tau_minus()[k].op() - aux.omega.op());
    d += weight[k] * norm * norm;
  }
  return 0.5 * d;
}

}  // namespace detail

/// D(mu) = 1/2 sum_i p_i ||tau_i- - omega||_1^2 in nats, over retained members
/// and weighted by the original probabilities p_i.
inline double d_mu(const AuxiliaryDecomposition& aux) { return detail::pinsker_sum(aux, aux.retained_probs); }

/// The same sum weighted by the mu- probabilities p_i eps_i / eps_av. This is
/// the weighting under which chi(mu-) >= D holds for every ensemble.
inline double d_mu_aux_weighted(const AuxiliaryDecomposition& aux) {
  return detail::pinsker_sum(aux, aux.weights().weights());
}

/// eps_av C(mu) H({p_i eps_i / eps_av}) + hbar(mu) - eps_av D(mu), and the
/// h(eps_av) variant.
inline BoundPair prop2_bound(const DiscreteEnsemble& mu, const AuxiliaryDecomposition& aux) {
  const double core = aux.eps_av * (c_mu(aux) * shannon_entropy(aux.weights()).value() - d_mu(aux));
  return {core + detail::hbar_of(mu, aux), core + detail::h_of_average(aux)};
}

inline BoundPair prop2_bound(const DiscreteEnsemble& mu) {
  try {
    return prop2_bound(mu, build_auxiliary(mu));
  } catch (const DegenerateEnsemble&) {
    return {};
  }
}

/// chi(mu), every bound with its intermediate quantities, and the slack
/// (bound minus chi, or the lemma's right side minus left side) of each
/// inequality keyed by name.
struct BoundReport {
  double chi = 0.0;
  double chi_plus = 0.0;
  double chi_minus = 0.0;
  double eps_av = 0.0;
  double hbar = 0.0;
  double h_of_eps_av = 0.0;
  double thm1_bound = 0.0;
  double thm1_bound_hvariant = 0.0;
  double prop1_bound = 0.0;
  double prop1_bound_hvariant = 0.0;
  double cor1_bound = 0.0;
  double cor1_bound_hvariant = 0.0;
  double prop2_bound = 0.0;
  double prop2_bound_hvariant = 0.0;
  double c_mu = 0.0;
  double d_mu = 0.0;
  double d_mu_aux_weighted = 0.0;
  double weights_entropy = 0.0;  ///< H({p_i eps_i / eps_av})
  double omega_residual = 0.0;   ///< ||avg(mu+) - avg(mu-)||_1
  std::map<std::string, double> slacks;
};

namespace slack {
inline constexpr const char* thm1 = "thm1";
inline constexpr const char* thm1_h = "thm1_hvariant";
inline constexpr const char* prop1 = "prop1";
inline constexpr const char* prop1_h = "prop1_hvariant";
inline constexpr const char* cor1 = "cor1";
inline constexpr const char* cor1_h = "cor1_hvariant";
inline constexpr const char* prop2 = "prop2";
inline constexpr const char* prop2_h = "prop2_hvariant";
/// chi(mu-) - D(mu) with the printed p_i weighting.
inline constexpr const char* chi_minus_ge_d = "lemma_chi_minus_ge_d";
/// chi(mu-) - D with mu- weights.
inline constexpr const char* chi_minus_ge_d_aux = "lemma_chi_minus_ge_d_aux_weighted";
/// C(mu) H(weights) - chi(mu+).
inline constexpr const char* chi_plus_le_ch = "lemma_chi_plus_le_c_h";
}  // namespace slack

inline BoundReport full_report(const DiscreteEnsemble& mu) {
  BoundReport r;
  r.chi = holevo_chi(mu).value();
  std::optional<AuxiliaryDecomposition> aux;
  try {
    aux.emplace(build_auxiliary(mu));
  } catch (const DegenerateEnsemble&) {
    // Every member equals the average: chi and all bounds vanish.
    r.chi = 0.0;
    for (const char* k : {slack::thm1, slack::thm1_h, slack::prop1, slack::prop1_h, slack::cor1,
                          slack::cor1_h, slack::prop2, slack::prop2_h, slack::chi_minus_ge_d,
                          slack::chi_minus_ge_d_aux, slack::chi_plus_le_ch}) {
      r.slacks[k] = 0.0;
    }
    return r;
  }

  r.chi_plus = holevo_chi(aux->mu_plus).value();
  r.chi_minus = holevo_chi(aux->mu_minus).value();
  r.eps_av = aux->eps_av;
  r.hbar = detail::hbar_of(mu, *aux);
  r.h_of_eps_av = binary_entropy(aux->eps_av);
  r.weights_entropy = shannon_entropy(aux->weights()).value();
  r.c_mu = c_mu(*aux);
  r.d_mu = d_mu(*aux);
  r.d_mu_aux_weighted = d_mu_aux_weighted(*aux);
  r.omega_residual = trace_norm(average_state(aux->mu_plus).op() - average_state(aux->mu_minus).op());

  const double thm1_core = r.eps_av * (r.chi_plus - r.chi_minus);
  r.thm1_bound = thm1_core + r.hbar;
  r.thm1_bound_hvariant = thm1_core + r.h_of_eps_av;
  const double prop1_core = r.eps_av * r.weights_entropy;
  r.prop1_bound = prop1_core + r.hbar;
  r.prop1_bound_hvariant = prop1_core + r.h_of_eps_av;
  const double cor1_core = r.eps_av * std::log(static_cast<double>(mu.size()));
  r.cor1_bound = cor1_core + r.hbar;
  r.cor1_bound_hvariant = cor1_core + r.h_of_eps_av;
  const double prop2_core = r.eps_av * (r.c_mu * r.weights_entropy - r.d_mu);
  r.prop2_bound = prop2_core + r.hbar;
  r.prop2_bound_hvariant = prop2_core + r.h_of_eps_av;

  r.slacks[slack::thm1] = r.thm1_bound - r.chi;
  r.slacks[slack::thm1_h] = r.thm1_bound_hvariant - r.chi;
  r.slacks[slack::prop1] = r.prop1_bound - r.chi;
  r.slacks[slack::prop1_h] = r.prop1_bound_hvariant - r.chi;
  r.slacks[slack::cor1] = r.cor1_bound - r.chi;
  r.slacks[slack::cor1_h] = r.cor1_bound_hvariant - r.chi;
  r.slacks[slack::prop2] = r.prop2_bound - r.chi;
  r.slacks[slack::prop2_h] = r.prop2_bound_hvariant - r.chi;
  r.slacks[slack::chi_minus_ge_d] = r.chi_minus - r.d_mu;
  r.slacks[slack::chi_minus_ge_d_aux] = r.chi_minus - r.d_mu_aux_weighted;
  r.slacks[slack::chi_plus_le_ch] = r.c_mu * r.weights_entropy - r.chi_plus;
  return r;
}

}  // namespace holevo
