#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "beurling/combo.hpp"

namespace beurling {

/// One per index i: the point k_i, the emergent mu_hat(k_i), how far the
/// discontinuity search went (0 for the two seeded indices), and b_i(k_i)
/// (absent for i = 1, where no b is defined yet).
struct TraceRow {
  std::int64_t i = 0;
  std::int64_t k = 0;
  Rational mu_hat;
  std::int64_t j_searched = 0;
  std::optional<Rational> b_at_k;
};

/// Snapshot of the iteration after i steps: k_1..k_i, the combo for b_i, the
/// cached value b_i(k_i), the emergent mu_hat values (recorded verbatim as
/// rationals; integrality is a checked claim, not an assumption), and the
/// per-step trace. Immutable once returned; safe to hand to concurrent
/// verifiers.
struct ConstructionState {
  std::int64_t i = 0;
  std::vector<std::int64_t> ks;
  Combo combo;
  Rational v_at_ki;
  std::vector<Rational> mu_hat;
  std::vector<TraceRow> trace;
};

/// The discontinuity search exhausted its limit without finding
/// b_i(k_i + j) != b_i(k_i). Mathematically interesting if it ever fires, so
/// the full state snapshot rides along.
class StalledSearch : public std::runtime_error {
 public:
  StalledSearch(ConstructionState s, std::int64_t limit)
      : std::runtime_error("discontinuity search stalled at k_i = " +
                           std::to_string(s.ks.back()) + " after j = " + std::to_string(limit)),
        state(std::move(s)),
        search_limit(limit) {}
  ConstructionState state;
  std::int64_t search_limit;
};

/// A checked conjectural property failed during construction (e.g. the new
/// combo is not -1 on the freshly flattened points). Carries the witness.
class ConjectureViolation : public std::runtime_error {
 public:
  ConjectureViolation(std::string what, ConstructionState s)
      : std::runtime_error(std::move(what)), state(std::move(s)) {}
  ConstructionState state;
};

/// The seed state: i = 2, k = [1, 2], b_2(x) = frac(x) - 2 frac(x/2),
/// mu_hat = [1, -1] (the seed coefficients), b_2(2) = 0.
ConstructionState init();

/// One iteration: find the least j >= 1 with b_i(k_i + j) != b_i(k_i), set
/// k_{i+1} = k_i + j, record the jump as mu_hat(k_{i+1}), and add the block
/// (1 + b_i(k_i)) * beta_{k_i, k_{i+1}}. search_limit = 0 means the default
/// 2 * k_i. Checks that the new combo is -1 at k_i (always provable) and on
/// the freshly flattened points (conjectural; violation throws).
ConstructionState step(ConstructionState state, std::int64_t search_limit = 0);

/// Steps until the next k would exceed limit_k. The per-step search limit is
/// search_limit_factor * k_i.
ConstructionState run(std::int64_t limit_k, std::int64_t search_limit_factor = 2);

/// run() that also calls visit(state) on the seed and after every applied
/// step. The verification harness replays constructions through this hook so
/// each check re-derives intermediate states instead of trusting recorded
/// ones.
ConstructionState run_with_observer(std::int64_t limit_k, std::int64_t search_limit_factor,
                                    const std::function<void(const ConstructionState&)>& visit);

/// Decomposition of the current combo against the expected coefficient form:
/// leading coefficients (mu_hat_j at modulus k_j for j < i) plus the tail
/// term at k_i. A mismatch is reported, not thrown: it would falsify the
/// lemma that predicts the form.
struct CoefficientForm {
  std::vector<Term> leading;
  Term tail;
  bool matches_mu_hat = false;
  std::optional<std::int64_t> first_mismatch_j;
};

CoefficientForm coefficient_form(const ConstructionState& state);

}  // namespace beurling
