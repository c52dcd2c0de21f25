#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcasimir/rational.hpp"

namespace qcasimir {

/// Sparse Laurent polynomial in v = q^{1/4} with rational coefficients.
///
/// Exponents are stored in quarter units: the term (e, c) is c * q^{e/4}.
/// Terms are kept sorted by exponent and no zero coefficient is ever stored,
/// so two equal polynomials have identical term vectors.
class QLaurent {
 public:
  using Term = std::pair<int, Rational>;

  QLaurent() = default;
  QLaurent(long c);  // NOLINT(google-explicit-constructor): scalars embed
  QLaurent(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// c * q^{quarter/4}
  static QLaurent monomial(const Rational& c, int quarter);
  /// q^{e}, e an integer power of q.
  static QLaurent q_pow(int e) { return monomial(1, 4 * e); }
  /// Builds from arbitrary (exponent, coefficient) pairs, merging duplicates.
  static QLaurent from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  /// Quarter exponent of the lowest / highest term. Precondition: nonzero.
  int low() const { return terms_.front().first; }
  int high() const { return terms_.back().first; }
  const Rational& leading_coeff() const { return terms_.back().second; }
  Rational coeff(int quarter) const;

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  QLaurent& operator*=(const Rational& c);

  /// Multiplies by q^{quarter/4}.
  QLaurent shifted(int quarter) const;
  QLaurent pow(unsigned e) const;

  /// Adds c * q^{quarter/4} * o in place.
  void add_scaled(const QLaurent& o, const Rational& c, int quarter);

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator-(QLaurent a);
  friend bool operator==(const QLaurent& a, const QLaurent& b) = default;

  /// Total order used only for canonical containers; not a ring order.
  friend std::strong_ordering compare(const QLaurent& a, const QLaurent& b);

 private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b. Throws DivisionByZero or NotDivisible.
QLaurent ql_div_exact(const QLaurent& a, const QLaurent& b);

/// Value at q^{1/4} = s (so q = s^4). Throws ZeroBase when s == 0.
Rational ql_eval(const QLaurent& a, const Rational& s);

/// Human-readable form, e.g. "q^3 + q - 1 + 1/2*q^(-1/2)".
std::string to_string(const QLaurent& a);

inline bool is_zero(const QLaurent& a) { return a.is_zero(); }
inline QLaurent exact_quotient(const QLaurent& a, const QLaurent& b) { return ql_div_exact(a, b); }

}  // namespace qcasimir
