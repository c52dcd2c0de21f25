#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcasimir/qlaurent.hpp"

namespace qcasimir {

/// Polynomial in abstract commuting symbols with QLaurent coefficients.
///
/// The symbol count is fixed per value. A default-constructed EPoly is the
/// zero polynomial with no symbols and combines with polynomials of any
/// symbol count.
class EPoly {
 public:
  using Monomial = std::vector<int>;
  using TermMap = std::map<Monomial, QLaurent>;

  EPoly() = default;
  explicit EPoly(int num_symbols) : nsym_(num_symbols) {}

  static EPoly constant(const QLaurent& c, int num_symbols);
  /// The symbol with 0-based index i.
  static EPoly symbol(int i, int num_symbols);
  static EPoly monomial(const QLaurent& c, Monomial exps);

  int num_symbols() const { return nsym_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  QLaurent coeff(const Monomial& m) const;
  /// Highest power of symbol i that occurs; -1 for the zero polynomial.
  int degree_in(int i) const;
  /// True when no symbol with index >= count occurs.
  bool depends_only_on_first(int count) const;

  EPoly& operator+=(const EPoly& o);
  EPoly& operator-=(const EPoly& o);
  EPoly& operator*=(const QLaurent& c);

  friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
  friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
  friend EPoly operator-(EPoly a) { return a *= QLaurent(-1); }
  friend EPoly operator*(const EPoly& a, const EPoly& b);
  friend EPoly operator*(EPoly a, const QLaurent& c) { return a *= c; }
  friend EPoly operator*(const QLaurent& c, EPoly a) { return a *= c; }
  friend bool operator==(const EPoly& a, const EPoly& b);

  EPoly pow(unsigned e) const;

  /// Formal partial derivative with respect to symbol i.
  EPoly partial(int i) const;

  /// Replaces symbol i by images[i]; all images share one symbol count.
  EPoly substitute(const std::vector<EPoly>& images) const;

  /// Applies every coefficient map f (QLaurent -> QLaurent), dropping zeros.
  template <class F>
  EPoly map_coefficients(F f) const {
    EPoly out(nsym_);
    for (const auto& [m, c] : terms_) {
      QLaurent v = f(c);
      if (!v.is_zero()) out.terms_.emplace(m, std::move(v));
    }
    return out;
  }

  /// Evaluates in any commutative ring R given images of the symbols and the
  /// embedding of QLaurent scalars.
  template <class R, class Embed>
  R evaluate(const std::vector<R>& values, const R& one, Embed embed) const {
    R sum = one - one;
    for (const auto& [m, c] : terms_) {
      R term = embed(c);
      for (int i = 0; i < nsym_; ++i)
        for (int e = 0; e < m[i]; ++e) term = term * values[i];
      sum += term;
    }
    return sum;
  }

 private:
  void adopt_symbols(const EPoly& o);

  int nsym_ = 0;
  TermMap terms_;
};

/// Exact multivariate quotient by lexicographic leading-term division.
/// Throws DivisionByZero or NotDivisible.
EPoly epoly_div_exact(const EPoly& a, const EPoly& b);

/// Renders with the given symbol names, e.g. "q^3*E1^2 - E2".
std::string to_string(const EPoly& p, const std::vector<std::string>& names);

inline bool is_zero(const EPoly& a) { return a.is_zero(); }
inline EPoly exact_quotient(const EPoly& a, const EPoly& b) { return epoly_div_exact(a, b); }

}  // namespace qcasimir
