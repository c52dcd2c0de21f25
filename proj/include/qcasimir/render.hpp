#pragma once

#include <string>
#include <vector>

#include "qcasimir/basis_change.hpp"
#include "qcasimir/casimir.hpp"

namespace qcasimir {

std::string latex(const Rational& r);
std::string latex(const QLaurent& a);
/// A weight as a combination of \varepsilon_i.
std::string latex(const Weight& w);
std::string latex(const GAElem& x);
std::string latex(const EPoly& p, const std::vector<std::string>& names);

/// Table of the positive roots with rho and the fundamental weights.
std::string latex_roots(const RootSystem& rs);
std::string text_roots(const RootSystem& rs);

}  // namespace qcasimir
