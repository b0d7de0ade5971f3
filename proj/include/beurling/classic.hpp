#pragma once

#include <cstdint>

#include "beurling/combo.hpp"
#include "beurling/mobius.hpp"

namespace beurling {

/// S_n: terms (mu(k), k) for k <= n with mu(k) != 0. The naive approximating
/// sequence; its zero-sum is g(n), generally nonzero.
Combo build_S(std::int64_t n, const MobiusTable& table);

/// B_n: S_n with the modulus-n coefficient corrected by -n*g(n) so the
/// zero-sum condition holds. Both displayed forms (tail mu(n) - n*g(n) over
/// k <= n, and tail -n*g(n-1) over k < n) are built and must agree; needs
/// exact g up to n and n >= 2.
Combo build_B(std::int64_t n, const MobiusTable& table);

/// V_n: S_n with the modulus-1 coefficient reduced by g(n); zero-sum 0.
Combo build_V(std::int64_t n, const MobiusTable& table);

}  // namespace beurling
