#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ietk/check.hpp"
#include "ietk/flow.hpp"

namespace ietk {

struct PerturbationBudget {
  int k = 0;
  CertifiedReal delta;   // min |T^{j1} beta_{t1} - T^{j2} beta_{t2}| over |j| <= K, beta_{t1} != beta_{t2}
  mpq_class epsilon;     // rational, at most delta / (20 m (2K+4))
  std::int64_t excluded_pairs = 0;  // coincidences allowed by the weak IDOC
  bool slack_ok = false;            // 10 m (2K+4) epsilon < delta
};

// Throws ValidationError if two orbit points with different beta coincide
// inside the horizon, AmbiguousComparison if a gap cannot be resolved.
PerturbationBudget perturbation_budget(const IetMap& t, int k);

struct WitnessCertificate {
  IetPair iet;
  Word w1, w2;
  CyclicSet set;
  IntVector b;
  std::string provenance;
  std::vector<Check> transcript;  // verification of this certificate
  std::vector<Check> stages;      // how it was produced; failed stages may have been repaired
  bool verified() const;
};

// Rebuilds every check from the certificate data alone.
std::vector<Check> verify_certificate(const WitnessCertificate& c, int idoc_horizon = 1000);

// The golden 5-interval certificate: sigma(251534), sigma(5153351) on the
// self-similar IET of the loop bbaababaaaba at (5,4,3,2,1).
WitnessCertificate golden_certificate(int bits = 256);

struct LiftResult {
  IetPair iet;  // (0, lambda, 0) at tau_m
  Word w1, w2;
  IntVector difference;
  CyclicSet set;  // Q with b(Q) = difference, words swapped if needed
  bool population_identity = false;
  bool matches_cyclic_set = false;
  bool dynamics_identity = false;  // T_lifted on nonzero intervals vs T_base shifted
  std::string dynamics_detail;
};

LiftResult lift_witness(const WitnessCertificate& c, int dynamics_samples = 100);

// lambda'_i = lambda_i + v_i - mean(v) with v_i = eps r_i sqrt(p_i) / (2 ceil(sqrt(p_max))),
// r_i uniform rational in (-1, 1). Basis: the original basis followed by the v_i.
struct PerturbationDraw {
  std::uint64_t index = 0;
  IetPair pair;
  std::vector<mpq_class> r;
};

PerturbationDraw draw_perturbation(const IetPair& base, const mpq_class& epsilon, std::uint64_t seed,
                                   std::uint64_t index);

// Finite checks of the perturbation lemmas at horizon K for one draw. ext are
// words of length K + 1 in the language of t.
struct PerturbationLemmaReport {
  bool in_budget = false;  // |lambda'| = |lambda|, |lambda_i - lambda'_i| < eps, lambda' > 0
  bool order_preserved = false;
  bool displacement_bounds = false;
  bool interval_bounds = false;  // |I^eps_w| >= 4/5 |I_w|
  bool containment = false;
  std::string detail;
  bool ok() const { return in_budget && order_preserved && displacement_bounds && interval_bounds && containment; }
};

PerturbationLemmaReport perturbation_lemma_check(const IetMap& t, const IetMap& te, const PerturbationBudget& budget,
                                                 const std::vector<Word>& ext);

// First draw (by index) whose IET is in the budget, passes IDOC to the
// horizon and keeps both words as recurrence words. Throws SearchExhausted.
WitnessCertificate perturb_and_verify(const IetPair& lifted, const Word& w1, const Word& w2,
                                      const PerturbationBudget& budget, std::uint64_t seed, int max_draws = 64,
                                      int idoc_horizon = 1000);

// Moves a certificate at pi to tau_m^sym along loop^j . p0, p0 the shortest
// path from tau_m^sym to pi. Throws SearchExhausted.
WitnessCertificate transfer_to_symmetric(const WitnessCertificate& c, int max_steps = 400,
                                         int idoc_horizon = 1000);

// Shortest closed primitive path at p (lexicographically first among those),
// up to max_len. Throws NotFound.
RauzyPath first_closed_primitive_path(const Permutation& p, int max_len);

// Certificate at p from a self-similar IET: first closed primitive path at p
// whose substitution yields a witness pair. Throws SearchExhausted.
WitnessCertificate periodic_seed(const Permutation& p, int path_max_len = 40, int witness_max_len = 64,
                                 int bits = 256);

struct ReductionOptions {
  int max_m = 9;
  std::uint64_t seed = 1;
  int idoc_horizon = 1000;
  int max_draws = 64;
  int lifted_draws = 8;
  int path_max_len = 40;
  int witness_max_len = 64;
  int transfer_max_steps = 400;
  int bits = 256;
};

// Certificate at tau_m^sym for odd m >= 5. Throws BadSize, SearchExhausted.
WitnessCertificate full_reduction(int m, const ReductionOptions& opt = {});

}  // namespace ietk
