#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "holevo/bounds.hpp"
#include "holevo/ensemble.hpp"
#include "holevo/gallery.hpp"

namespace holevo::verify {

/// Thresholds for the property suites, in nats.
inline constexpr double kBoundSlackTol = 1e-8;
inline constexpr double kOrderingTol = 1e-9;
inline constexpr double kOmegaTol = 1e-9;
inline constexpr double kLemmaTol = 1e-8;
inline constexpr double kTightnessTol = 1e-9;

/// Independent generator for trial `trial` of a run started from `seed`.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

/// Random state of dimension dim; pure with probability 1/2, otherwise of
/// uniformly random rank.
inline DensityOperator random_state_mixture(long dim, Rng& rng) {
  std::bernoulli_distribution pure(0.5);
  if (pure(rng)) return random_pure_state(dim, rng);
  std::uniform_int_distribution<long> rank(1, dim);
  return random_mixed_state(dim, rank(rng), rng);
}

/// A failing check: which trial, which inequality, by how much, and the
/// instance that produced it.
struct Violation {
  std::uint64_t trial = 0;
  std::string inequality;
  double slack = 0.0;
  std::optional<DiscreteEnsemble> instance;
};

struct SuiteResult {
  std::string suite;
  std::size_t trials = 0;
  /// Smallest slack seen per inequality (negative means violated by that much).
  std::map<std::string, double> worst;
  /// Checks reported but not enforced.
  std::map<std::string, double> informational;
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }

  void record(const std::string& name, double slack) {
    auto [it, inserted] = worst.try_emplace(name, slack);
    if (!inserted) it->second = std::min(it->second, slack);
  }
  void note(const std::string& name, double slack) {
    auto [it, inserted] = informational.try_emplace(name, slack);
    if (!inserted) it->second = std::min(it->second, slack);
  }
};

/// Entropic inequality on random pairs of dimension 2..8.
inline SuiteResult run_fei_suite(std::size_t trials, std::uint64_t seed) {
  SuiteResult res{"fei", trials, {}, {}, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    std::uniform_int_distribution<long> dim_dist(2, 8);
    const long dim = dim_dist(rng);
    DensityOperator r = random_state_mixture(dim, rng);
    DensityOperator s = random_state_mixture(dim, rng);
    const FeiReport rep = fei_check(r, s);
    res.record("fei", rep.slack);
    if (rep.slack < -kBoundSlackTol) {
      res.violations.push_back({t, "fei", rep.slack,
                                DiscreteEnsemble(ProbabilityVector::uniform(2), {r, s}, {"rho", "sigma"})});
    }
  }
  return res;
}

/// Checks every BoundReport invariant of one ensemble into `res`.
inline void check_report(const DiscreteEnsemble& mu, const BoundReport& rep, std::uint64_t trial,
                         SuiteResult& res) {
  auto enforce = [&](const std::string& name, double slack, double tol) {
    res.record(name, slack);
    if (slack < -tol) res.violations.push_back({trial, name, slack, mu});
  };
  for (const char* name : {slack::thm1, slack::thm1_h, slack::prop1, slack::prop1_h, slack::cor1,
                           slack::cor1_h, slack::prop2, slack::prop2_h}) {
    enforce(std::string("bound.") + name, rep.slacks.at(name), kBoundSlackTol);
  }
  enforce("order.thm1<=prop1", rep.prop1_bound - rep.thm1_bound, kOrderingTol);
  enforce("order.prop2<=prop1", rep.prop1_bound - rep.prop2_bound, kOrderingTol);
  enforce("order.prop1<=cor1", rep.cor1_bound - rep.prop1_bound, kOrderingTol);
  enforce("order.hbar<=h(eps_av)", rep.h_of_eps_av - rep.hbar, kOrderingTol);
  enforce("average_identity", -rep.omega_residual, kOmegaTol);
  enforce("lemma.chi_minus>=D_aux_weighted", rep.slacks.at(slack::chi_minus_ge_d_aux), kLemmaTol);
  enforce("lemma.chi_plus<=C*H", rep.slacks.at(slack::chi_plus_le_ch), kLemmaTol);
  res.note("lemma.chi_minus>=D_printed_weights", rep.slacks.at(slack::chi_minus_ge_d));
}

/// Random ensembles with m in 2..6 members of dimension 2..8.
inline SuiteResult run_bounds_suite(std::size_t trials, std::uint64_t seed) {
  SuiteResult res{"bounds", trials, {}, {}, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    std::uniform_int_distribution<std::size_t> m_dist(2, 6);
    std::uniform_int_distribution<long> dim_dist(2, 8);
    const std::size_t m = m_dist(rng);
    const long dim = dim_dist(rng);
    const DiscreteEnsemble mu = random_ensemble(m, dim, rng);
    check_report(mu, full_report(mu), t, res);
  }
  return res;
}

/// Orthogonal equiprobable pure ensembles, m = 2..8: the thm1 bound equals chi.
inline SuiteResult run_tightness_suite() {
  SuiteResult res{"tightness", 7, {}, {}, {}};
  for (long m = 2; m <= 8; ++m) {
    const DiscreteEnsemble mu = orthogonal_ensemble(m);
    const BoundReport rep = full_report(mu);
    const double dev = std::abs(rep.thm1_bound - rep.chi);
    res.record("thm1_equality", -dev);
    if (dev > kTightnessTol) {
      res.violations.push_back({static_cast<std::uint64_t>(m), "thm1_equality", -dev, mu});
    }
  }
  return res;
}

}  // namespace holevo::verify
