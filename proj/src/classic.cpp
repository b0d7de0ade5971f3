#include "beurling/classic.hpp"

#include <stdexcept>

namespace beurling {

namespace {

void require_range(std::int64_t n, std::int64_t lo, const MobiusTable& table, bool needs_g) {
  if (n < lo) throw std::out_of_range("classic: n must be >= " + std::to_string(lo));
  if (n > table.n) throw std::out_of_range("classic: n beyond sieve range");
  if (needs_g && n > table.g_limit)
    throw std::out_of_range("classic: n beyond exact-g range");
}

std::vector<Term> mu_terms(std::int64_t upto, const MobiusTable& table) {
  std::vector<Term> ts;
  for (std::int64_t k = 1; k <= upto; ++k) {
    const std::int8_t mu = table.mu_at(k);
    if (mu != 0) ts.push_back({Rational(static_cast<long long>(mu)), k});
  }
  return ts;
}

}  // namespace

Combo build_S(std::int64_t n, const MobiusTable& table) {
  require_range(n, 1, table, false);
  return Combo::from_terms(mu_terms(n, table));
}

Combo build_B(std::int64_t n, const MobiusTable& table) {
  require_range(n, 2, table, true);

  std::vector<Term> full = mu_terms(n, table);
  full.push_back({Rational(-n) * g_value(table, n), n});
  Combo first_form = Combo::from_terms(std::move(full));

  std::vector<Term> trunc = mu_terms(n - 1, table);
  trunc.push_back({Rational(-n) * g_value(table, n - 1), n});
  Combo second_form = Combo::from_terms(std::move(trunc));

  if (!(first_form == second_form))
    throw std::logic_error("build_B: the two displayed forms disagree at n = " + std::to_string(n));
  return first_form;
}

Combo build_V(std::int64_t n, const MobiusTable& table) {
  require_range(n, 1, table, true);
  std::vector<Term> ts = mu_terms(n, table);
  ts.push_back({-g_value(table, n), 1});
  return Combo::from_terms(std::move(ts));
}

}  // namespace beurling
