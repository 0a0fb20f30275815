#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holevo/entropy.hpp"
#include "holevo/errors.hpp"
#include "holevo/linalg.hpp"

namespace holevo {

/// Finite ensemble {p_i, rho_i} of states sharing one dimension.
class DiscreteEnsemble {
 public:
  DiscreteEnsemble(ProbabilityVector probs, std::vector<DensityOperator> states,
                   std::vector<std::string> labels = {})
      : probs_(std::move(probs)), states_(std::move(states)), labels_(std::move(labels)) {
    if (states_.empty()) throw ValidationError("ensemble has no members");
    if (probs_.size() != states_.size()) {
      throw ValidationError("ensemble has " + std::to_string(probs_.size()) + " probabilities but " +
                            std::to_string(states_.size()) + " states");
    }
    for (const auto& s : states_) {
      if (s.dim() != states_.front().dim()) throw DimensionMismatch(states_.front().dim(), s.dim());
    }
    if (!labels_.empty() && labels_.size() != states_.size()) {
      throw ValidationError("label count does not match member count");
    }
  }

  std::size_t size() const noexcept { return states_.size(); }
  long dim() const noexcept { return states_.front().dim(); }
  const ProbabilityVector& probs() const noexcept { return probs_; }
  const std::vector<DensityOperator>& states() const noexcept { return states_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::string> label(std::size_t i) const {
    if (labels_.empty() || labels_[i].empty()) return std::nullopt;
    return labels_[i];
  }

 private:
  ProbabilityVector probs_;
  std::vector<DensityOperator> states_;
  std::vector<std::string> labels_;
};

inline DensityOperator average_state(const DiscreteEnsemble& mu) {
  HermitianOperator acc = HermitianOperator::zero(mu.dim());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    acc = acc + mu.probs()[i] * mu.states()[i].op();
  }
  return DensityOperator::unchecked(std::move(acc));
}

/// chi(mu) = S(average) - sum_i p_i S(rho_i).
inline EntropyValue holevo_chi(const DiscreteEnsemble& mu) {
  double mixed = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu.probs()[i] > 0.0) mixed += mu.probs()[i] * von_neumann_entropy(mu.states()[i]).value();
  }
  return EntropyValue(von_neumann_entropy(average_state(mu)).value() - mixed);
}

struct MemberEpsilons {
  std::vector<double> eps;  ///< eps_i = trace distance of rho_i to the average
  double eps_av = 0.0;      ///< sum_i p_i eps_i
};

inline MemberEpsilons member_epsilons(const DiscreteEnsemble& mu) {
  const DensityOperator avg = average_state(mu);
  MemberEpsilons out;
  out.eps.reserve(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    out.eps.push_back(trace_distance(mu.states()[i], avg));
    out.eps_av += mu.probs()[i] * out.eps.back();
  }
  return out;
}

/// hbar(mu) = sum_i p_i h(eps_i).
inline double mean_binary_entropy(const DiscreteEnsemble& mu) {
  const MemberEpsilons e = member_epsilons(mu);
  double s = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += mu.probs()[i] * binary_entropy(e.eps[i]);
  return s;
}

/// The normalized Jordan parts of rho_i - average and the two auxiliary
/// ensembles mu+ = {w_i, tau_i+}, mu- = {w_i, tau_i-} with w_i = p_i eps_i / eps_av.
///
/// Members with eps_i <= tol::eps_zero carry zero weight and are dropped;
/// `retained[k]` is the original index of the k-th member of mu+/mu-.
struct AuxiliaryDecomposition {
  std::vector<double> eps;
  double eps_av = 0.0;
  std::vector<std::size_t> retained;
  std::vector<double> retained_probs;  ///< original p_i of the retained members
  DiscreteEnsemble mu_plus;
  DiscreteEnsemble mu_minus;
  DensityOperator omega;  ///< common average of mu+ and mu-

  const ProbabilityVector& weights() const noexcept { return mu_plus.probs(); }
  const std::vector<DensityOperator>& tau_plus() const noexcept { return mu_plus.states(); }
  const std::vector<DensityOperator>& tau_minus() const noexcept { return mu_minus.states(); }
};

inline AuxiliaryDecomposition build_auxiliary(const DiscreteEnsemble& mu) {
  const DensityOperator avg = average_state(mu);
  const std::size_t m = mu.size();

  std::vector<double> eps(m);
  double eps_av = 0.0;
  std::vector<std::size_t> retained;
  std::vector<double> retained_probs;
  std::vector<DensityOperator> tau_plus, tau_minus;
  std::vector<double> raw_weights;

  for (std::size_t i = 0; i < m; ++i) {
    const HermitianOperator diff = mu.states()[i].op() - avg.op();
    const EigenSystem es = hermitian_eig(diff);
    eps[i] = std::clamp(0.5 * es.eigenvalues.cwiseAbs().sum(), 0.0, 1.0);
    eps_av += mu.probs()[i] * eps[i];
    if (eps[i] <= tol::eps_zero) continue;
    retained.push_back(i);
    retained_probs.push_back(mu.probs()[i]);
    tau_plus.push_back(DensityOperator::unchecked(detail::spectral_part(es, true) / eps[i]));
    tau_minus.push_back(DensityOperator::unchecked(detail::spectral_part(es, false) / eps[i]));
    raw_weights.push_back(mu.probs()[i] * eps[i]);
  }
  if (eps_av <= tol::eps_zero || retained.empty()) throw DegenerateEnsemble();

  ProbabilityVector weights = ProbabilityVector::normalized(raw_weights);
  std::vector<std::string> labels;
  if (!mu.labels().empty()) {
    for (std::size_t i : retained) labels.push_back(mu.labels()[i]);
  }
  DiscreteEnsemble plus(weights, std::move(tau_plus), labels);
  DiscreteEnsemble minus(std::move(weights), std::move(tau_minus), std::move(labels));
  DensityOperator omega = average_state(plus);
  return {std::move(eps),  eps_av,          std::move(retained), std::move(retained_probs),
          std::move(plus), std::move(minus), std::move(omega)};
}

}  // namespace holevo
