#include "beurling/constructor.hpp"

#include <functional>
#include <utility>

namespace beurling {

namespace {

struct Jump {
  std::int64_t j = 0;
  Rational delta;
};

// Least j in [1, search_limit] with b_i(k_i + j) != b_i(k_i), found through
// the zero-sum difference shortcut. While k_i + j < 2 k_i the tail term's
// floor never moves, so the huge tail coefficient stays out of the loop.
std::optional<Jump> search_jump(const ConstructionState& s, std::int64_t search_limit) {
  const std::int64_t ki = s.ks.back();
  for (std::int64_t j = 1; j <= search_limit; ++j) {
    Rational d = diff_int(s.combo, ki, ki + j);
    if (!d.is_zero()) return Jump{j, std::move(d)};
  }
  return std::nullopt;
}

ConstructionState apply_jump(ConstructionState s, Jump jump) {
  const std::int64_t ki = s.ks.back();
  const std::int64_t knext = ki + jump.j;
  const Rational one_plus_v = Rational(1) + s.v_at_ki;
  if (one_plus_v.is_zero())
    throw ConjectureViolation(
        "1 + b_i(k_i) = 0 at k_i = " + std::to_string(ki) + "; the update block vanishes",
        std::move(s));

  Combo next = add_scaled(s.combo, one_plus_v, make_beta(ki, knext));

  // b_{i+1}(k_i) = -1 is unconditional; a failure here is an arithmetic bug.
  if (!(eval_int_floor(next, ki) == Rational(-1)))
    throw std::logic_error("b_{i+1}(k_i) != -1 at k_i = " + std::to_string(ki));

  // The freshly flattened points; -1 there is conjectural (it needs the
  // doubling condition), so a violation is reported with the state.
  for (std::int64_t m = ki + 1; m < knext; ++m) {
    if (!(eval_int_floor(next, m) == Rational(-1)))
      throw ConjectureViolation(
          "b_{i+1}(" + std::to_string(m) + ") != -1 inside [k_i, k_{i+1})", std::move(s));
  }

  Rational v_next = eval_int_floor(next, knext);
  s.combo = std::move(next);
  s.ks.push_back(knext);
  s.mu_hat.push_back(jump.delta);
  s.v_at_ki = std::move(v_next);
  s.i += 1;
  s.trace.push_back({s.i, knext, std::move(jump.delta), jump.j, s.v_at_ki});
  return s;
}

void require_valid(const ConstructionState& s) {
  if (s.i < 2 || s.ks.size() != static_cast<std::size_t>(s.i) ||
      s.mu_hat.size() != s.ks.size())
    throw std::invalid_argument("malformed construction state");
}

}  // namespace

ConstructionState init() {
  ConstructionState s;
  s.i = 2;
  s.ks = {1, 2};
  s.combo = Combo::from_terms({{Rational(1), 1}, {Rational(-2), 2}});
  s.mu_hat = {Rational(1), Rational(-1)};
  s.v_at_ki = eval_int(s.combo, 2);
  s.trace.push_back({1, 1, Rational(1), 0, std::nullopt});
  s.trace.push_back({2, 2, Rational(-1), 0, s.v_at_ki});
  return s;
}

ConstructionState step(ConstructionState state, std::int64_t search_limit) {
  require_valid(state);
  if (search_limit <= 0) search_limit = 2 * state.ks.back();
  auto jump = search_jump(state, search_limit);
  if (!jump) throw StalledSearch(std::move(state), search_limit);
  return apply_jump(std::move(state), std::move(*jump));
}

ConstructionState run_with_observer(std::int64_t limit_k, std::int64_t search_limit_factor,
                                    const std::function<void(const ConstructionState&)>& visit) {
  if (limit_k < 2) throw std::invalid_argument("run: limit_k must be >= 2");
  if (search_limit_factor < 1)
    throw std::invalid_argument("run: search_limit_factor must be >= 1");
  ConstructionState s = init();
  if (visit) visit(s);
  while (s.ks.back() < limit_k) {
    const std::int64_t limit = search_limit_factor * s.ks.back();
    auto jump = search_jump(s, limit);
    if (!jump) throw StalledSearch(std::move(s), limit);
    if (s.ks.back() + jump->j > limit_k) break;
    s = apply_jump(std::move(s), std::move(*jump));
    if (visit) visit(s);
  }
  return s;
}

ConstructionState run(std::int64_t limit_k, std::int64_t search_limit_factor) {
  return run_with_observer(limit_k, search_limit_factor, nullptr);
}

CoefficientForm coefficient_form(const ConstructionState& state) {
  require_valid(state);
  CoefficientForm out;
  out.matches_mu_hat = true;
  const auto& terms = state.combo.terms();
  std::size_t ti = 0;
  for (std::int64_t idx = 0; idx + 1 < state.i; ++idx) {
    const std::int64_t kj = state.ks[static_cast<std::size_t>(idx)];
    Rational c;
    if (ti < terms.size() && terms[ti].modulus == kj) {
      c = terms[ti].coeff;
      ++ti;
    }
    out.leading.push_back({c, kj});
    if (out.matches_mu_hat && !(c == state.mu_hat[static_cast<std::size_t>(idx)])) {
      out.matches_mu_hat = false;
      out.first_mismatch_j = idx + 1;
    }
  }
  Rational tail_c;
  if (ti < terms.size() && terms[ti].modulus == state.ks.back()) {
    tail_c = terms[ti].coeff;
    ++ti;
  }
  out.tail = {std::move(tail_c), state.ks.back()};
  if (ti != terms.size()) {
    // Moduli outside k_1..k_i cannot appear via the update rule; flag anyway.
    out.matches_mu_hat = false;
    if (!out.first_mismatch_j) out.first_mismatch_j = 0;
  }
  return out;
}

}  // namespace beurling
