#pragma once

#include "qcasimir/group_algebra.hpp"
#include "qcasimir/root_system.hpp"
#include "qcasimir/weyl_group.hpp"

namespace qcasimir {

/// Sum over W of sgn(w) w(x). Throws RankTooLargeForEnumeration.
GAElem antisymmetrize(const GAElem& x, const RootSystem& rs);

enum class DenominatorMode { Product, Alternant };

/// prod_{alpha > 0} (e^{alpha/2} - e^{-alpha/2}), or A(e^rho). Cached.
const GAElem& weyl_denominator(const RootSystem& rs, DenominatorMode mode);

/// A(e^{lam+rho}) / A(e^rho). Throws NotDominant. Cached.
GAElem weyl_character(const RootSystem& rs, const Weight& lam);

/// Character of the r-th exterior power of the natural module: the t^r
/// coefficient of (1+t)^{[B]} prod_i (1 + t e^{eps_i})(1 + t e^{-eps_i}).
/// Zero for r < 0 or r > dim_natural.
GAElem ext_power_char(const RootSystem& rs, int r);

/// sum over I'_n of e^{eps_a}, the character of the natural module.
GAElem natural_character(const RootSystem& rs);

}  // namespace qcasimir
