#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qcasimir/qlaurent.hpp"
#include "qcasimir/weight.hpp"

namespace qcasimir {

/// Finite sum of formal exponentials e^mu with QLaurent coefficients.
///
/// Terms are ordered lexicographically by weight; the last term leads. A
/// default-constructed element is zero with unspecified rank and adopts the
/// rank of whatever it is combined with.
class GAElem {
 public:
  using TermMap = std::map<Weight, QLaurent>;

  GAElem() = default;
  explicit GAElem(int rank) : rank_(rank) {}

  /// c * e^mu
  static GAElem monomial(const Weight& mu, const QLaurent& c = QLaurent(1));
  static GAElem constant(const QLaurent& c, int rank);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  QLaurent coeff(const Weight& mu) const;
  /// Lexicographically largest weight. Precondition: nonzero.
  const Weight& leading_weight() const { return terms_.rbegin()->first; }
  const QLaurent& leading_coeff() const { return terms_.rbegin()->second; }

  /// Adds c * e^{shift} * o in place.
  void add_scaled(const GAElem& o, const QLaurent& c, const Weight& shift);
  void add_term(const Weight& mu, const QLaurent& c);

  GAElem& operator+=(const GAElem& o);
  GAElem& operator-=(const GAElem& o);
  GAElem& operator*=(const QLaurent& c);
  friend GAElem operator+(GAElem a, const GAElem& b) { return a += b; }
  friend GAElem operator-(GAElem a, const GAElem& b) { return a -= b; }
  friend GAElem operator-(GAElem a) { return a *= QLaurent(-1); }
  friend GAElem operator*(const GAElem& a, const GAElem& b);
  friend GAElem operator*(GAElem a, const QLaurent& c) { return a *= c; }
  friend GAElem operator*(const QLaurent& c, GAElem a) { return a *= c; }
  friend bool operator==(const GAElem& a, const GAElem& b) { return a.terms_ == b.terms_; }

  /// All weights have integer coordinates.
  bool has_integral_support() const;
  /// All coefficients are constants in q.
  bool is_q_free() const;

 private:
  void adopt_rank(int rank);

  int rank_ = -1;
  TermMap terms_;
};

/// Exact quotient num / den by repeated cancellation of the lexicographically
/// leading term. Throws DivisionByZero or NotDivisible.
GAElem ga_div_exact(const GAElem& num, const GAElem& den);

/// Value with e^{eps_i/2} -> half_point[i] and q^{1/4} -> s.
/// Throws ZeroBase for a zero base and LengthMismatch for a wrong length.
Rational ga_eval(const GAElem& x, const Rational& s, std::span<const Rational> half_point);

/// Value with e^{eps_i} -> point[i]. Half-integer weights need every point[i]
/// to be a rational square; otherwise GridMismatch.
Rational ga_eval_full(const GAElem& x, const Rational& s, std::span<const Rational> point);

/// Exact rational square root, if there is one.
bool rational_sqrt(const Rational& x, Rational& root);

/// "q^3*e^(1, 0) + ..." in ascending weight order.
std::string to_string(const GAElem& x);

inline bool is_zero(const GAElem& a) { return a.is_zero(); }
inline GAElem exact_quotient(const GAElem& a, const GAElem& b) { return ga_div_exact(a, b); }

}  // namespace qcasimir
