#pragma once

#include <span>
#include <string>
#include <vector>

#include "qcasimir/group_algebra.hpp"
#include "qcasimir/root_system.hpp"

namespace qcasimir {

enum class Provenance { Antisymmetrizer, HookExpansion, BinomialTransform };

std::string_view provenance_name(Provenance p);

/// An element of the character ring standing for Ch G_{n,k} or the
/// Harish-Chandra image C^0_{n,l}. The value is body / (q^{-1} - q)^denominator_power.
struct CasimirImage {
  LieType type = LieType::B;
  int rank = 0;
  int index = 0;
  Provenance provenance = Provenance::Antisymmetrizer;
  GAElem body;
  int denominator_power = 0;

  bool is_laurent() const { return denominator_power == 0; }
};

/// e^{rho + k eps_1} prod over positive alpha with (alpha, eps_1) > 0 of
/// (1 - q^{-2(alpha, eps_1)} e^{-alpha}).
GAElem h_element(const RootSystem& rs, int k);

/// Ch G_{n,k} = (q^{-k} Delta [type B] + q^{c_n - 1} A(H_{n,k})) / Delta.
CasimirImage ch_g_via_antisym(const RootSystem& rs, int k);

/// Ch G_{n,k} assembled from hook characters, branch chosen by k.
CasimirImage ch_g_via_hooks(const RootSystem& rs, int k);

/// The rational expression for G_{n,k} in the L_a, evaluated exactly at
/// L_a = half_point[a]^2 (L_{-a} = 1/L_a) and q = s^4.
/// Throws DegenerateEvaluation if a denominator vanishes.
Rational g_rational_eval(const RootSystem& rs, int k, const Rational& s, std::span<const Rational> half_point);

/// The rational expression for C^0_{n,l} (l >= 1) evaluated the same way.
Rational c0_rational_eval(const RootSystem& rs, int ell, const Rational& s, std::span<const Rational> half_point);

/// sum_{k=0}^{l} binom(l,k) (-q^{1-c_n})^k Ch G_{n,k}, divided by as many
/// factors (q^{-1} - q) as divide it exactly; the rest is kept in
/// denominator_power. l = 0 gives G_{n,0}.
CasimirImage hc_image(const RootSystem& rs, int ell);

/// True when every coefficient of x is divisible by (q^{-1} - q)^p.
bool divisible_by_hc_factor(const GAElem& x, int p);

/// The closed eigenvalue formula of omega_lambda(C_{n,l}) at q = s^4.
/// Removable singularities are resolved as exact limits along a generic
/// perturbation of lambda; a genuine pole raises DegenerateEvaluation.
Rational eigenvalue_direct(const RootSystem& rs, const Weight& lam, int ell, const Rational& s);

/// hc_image evaluated at e^{eps_a} = q^{(2 eps_a, lambda + rho)}, q = s^4.
Rational eigenvalue_via_hc(const RootSystem& rs, const Weight& lam, int ell, const Rational& s);

/// The half-point (values of e^{eps_a/2}) at which the image is evaluated
/// for the highest weight lambda.
std::vector<Rational> highest_weight_point(const RootSystem& rs, const Weight& lam, const Rational& s);

/// One summand of the hook expansion of Ch G_{n,k}.
///
/// For a character term, q_power is the exponent of q relative to q^{2n}
/// and partition is the hook (k-r, 1^rbar) with zeros dropped; bar marks the
/// second type D constituent. The constant term keeps its absolute power.
struct Constituent {
  bool constant = false;
  int q_power = 0;
  std::vector<int> partition;
  bool bar = false;
  int multiplicity = 0;

  friend auto operator<=>(const Constituent&, const Constituent&) = default;
};

/// Normalised constituents of Ch G_{n,k}, sorted. Requires 1 <= k <= n.
std::vector<Constituent> constituents(const RootSystem& rs, int k);

std::string to_string(const Constituent& c);

}  // namespace qcasimir
