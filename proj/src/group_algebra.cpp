#include "qcasimir/group_algebra.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <optional>
#include <unordered_map>
#include <sstream>

#include "qcasimir/errors.hpp"

namespace qcasimir {

GAElem GAElem::monomial(const Weight& mu, const QLaurent& c) {
  GAElem out(mu.rank());
  if (!c.is_zero()) out.terms_.emplace(mu, c);
  return out;
}

GAElem GAElem::constant(const QLaurent& c, int rank) { return monomial(Weight(rank), c); }

QLaurent GAElem::coeff(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? QLaurent() : it->second;
}

void GAElem::adopt_rank(int rank) {
  if (rank < 0) return;
  if (rank_ < 0) {
    rank_ = rank;
  } else if (rank_ != rank) {
    throw Error(Errc::RankMismatch, "group algebra elements of rank " + std::to_string(rank_) + " and " +
                                        std::to_string(rank));
  }
}

void GAElem::add_term(const Weight& mu, const QLaurent& c) {
  if (c.is_zero()) return;
  adopt_rank(mu.rank());
  auto [it, inserted] = terms_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GAElem::add_scaled(const GAElem& o, const QLaurent& c, const Weight& shift) {
  if (c.is_zero() || o.is_zero()) return;
  adopt_rank(o.rank_);
  adopt_rank(shift.rank());
  const bool unit = c == QLaurent(1);
  for (const auto& [mu, a] : o.terms_) {
    Weight w = mu + shift;
    if (unit)
      add_term(w, a);
    else
      add_term(w, a * c);
  }
}

GAElem& GAElem::operator+=(const GAElem& o) {
  adopt_rank(o.rank_);
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

GAElem& GAElem::operator-=(const GAElem& o) {
  adopt_rank(o.rank_);
  for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
  return *this;
}

GAElem& GAElem::operator*=(const QLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, a] : terms_) a *= c;
  return *this;
}

namespace {

// Division by a q-free divisor with unit leading coefficient splits into one
// division per power of q, done on packed weight keys with int64 coefficients.
// Keys add like weights once the per-byte bias is removed.
constexpr std::uint64_t kBias = 0x8080808080808080ULL;

using IntTerms = std::map<std::uint64_t, long long>;

int key_coord(std::uint64_t key, int i) { return static_cast<int>((key >> (8 * (Weight::kMaxRank - 1 - i))) & 0xFFU) - 128; }

bool small_int(const Rational& x, long long& out) {
  if (!is_integer(x) || !x.get_num().fits_slong_p()) return false;
  out = x.get_num().get_si();
  return true;
}

// Coordinates up to this size keep every intermediate key in range.
constexpr int kSmall = 63;

// Nullopt on int64 overflow or large coordinates; throws NotDivisible when the division is inexact.
std::optional<IntTerms> div_int(IntTerms rem, const std::vector<std::pair<std::uint64_t, long long>>& den, int n) {
  int lo[Weight::kMaxRank], hi[Weight::kMaxRank], dlo[Weight::kMaxRank], dhi[Weight::kMaxRank];
  for (int i = 0; i < n; ++i) {
    lo[i] = dlo[i] = INT_MAX;
    hi[i] = dhi[i] = INT_MIN;
  }
  for (const auto& [k, c] : rem)
    for (int i = 0; i < n; ++i) {
      if (std::abs(key_coord(k, i)) > kSmall) return std::nullopt;
      lo[i] = std::min(lo[i], key_coord(k, i));
      hi[i] = std::max(hi[i], key_coord(k, i));
    }
  for (const auto& [k, c] : den)
    for (int i = 0; i < n; ++i) {
      if (std::abs(key_coord(k, i)) > kSmall) return std::nullopt;
      dlo[i] = std::min(dlo[i], key_coord(k, i));
      dhi[i] = std::max(dhi[i], key_coord(k, i));
    }
  const std::uint64_t floor = rem.begin()->first - den.front().first + kBias;
  const std::uint64_t lead = den.back().first;
  const long long lead_c = den.back().second;
  IntTerms quot;
  while (!rem.empty()) {
    const auto [top, top_c] = *rem.rbegin();
    const std::uint64_t w = top - lead + kBias;
    bool inside = w >= floor;
    for (int i = 0; inside && i < n; ++i) {
      int d = key_coord(top, i) - key_coord(lead, i);
      inside = d >= lo[i] - dlo[i] && d <= hi[i] - dhi[i];
    }
    if (!inside) throw Error(Errc::NotDivisible, "remainder survives lexicographic division");
    const long long c = top_c * lead_c;  // lead_c is +-1
    quot.emplace(w, c);
    for (const auto& [k, dc] : den) {
      long long prod, sum;
      if (__builtin_mul_overflow(c, dc, &prod)) return std::nullopt;
      auto [it, inserted] = rem.try_emplace(k + w - kBias, 0);
      if (__builtin_sub_overflow(it->second, prod, &sum)) return std::nullopt;
      it->second = sum;
      if (sum == 0) rem.erase(it);
    }
  }
  return quot;
}

using Component = std::vector<std::pair<std::uint64_t, long long>>;

// Splits x by powers of q; nullopt when a coefficient leaves int64 or a
// coordinate is too large for key arithmetic.
std::optional<std::map<int, Component>> int_components(const GAElem& x) {
  std::map<int, Component> out;
  for (const auto& [mu, c] : x.terms()) {
    for (int i = 0; i < mu.rank(); ++i)
      if (std::abs(mu.doubled(i)) > kSmall) return std::nullopt;
    for (const auto& [e, r] : c.terms()) {
      long long v;
      if (!small_int(r, v)) return std::nullopt;
      out[e].emplace_back(mu.key(), v);
    }
  }
  return out;
}

std::optional<GAElem> mul_int(const GAElem& a, const GAElem& b, int n) {
  auto ca = int_components(a);
  if (!ca) return std::nullopt;
  auto cb = int_components(b);
  if (!cb) return std::nullopt;
  std::map<int, std::unordered_map<std::uint64_t, long long>> acc;
  for (const auto& [e, va] : *ca)
    for (const auto& [f, vb] : *cb) {
      auto& m = acc[e + f];
      m.reserve(m.size() + va.size() * vb.size() / 4);
      for (const auto& [ka, xa] : va)
        for (const auto& [kb, xb] : vb) {
          long long prod;
          if (__builtin_mul_overflow(xa, xb, &prod)) return std::nullopt;
          long long& slot = m[ka + kb - kBias];
          if (__builtin_add_overflow(slot, prod, &slot)) return std::nullopt;
        }
    }
  std::map<std::uint64_t, std::vector<QLaurent::Term>> terms;
  for (const auto& [e, m] : acc)
    for (const auto& [k, c] : m)
      if (c != 0) terms[k].emplace_back(e, Rational(static_cast<long>(c)));
  GAElem out(n);
  std::vector<int> coords(n);
  for (auto& [k, t] : terms) {
    for (int i = 0; i < n; ++i) coords[i] = key_coord(k, i);
    out.add_term(Weight::from_doubled(coords), QLaurent::from_terms(std::move(t)));
  }
  return out;
}

}  // namespace

GAElem operator*(const GAElem& a, const GAElem& b) {
  if (a.rank() >= 0 && a.rank() == b.rank() && a.size() * b.size() > 64)
    if (auto fast = mul_int(a, b, a.rank())) return *fast;
  GAElem out;
  out.adopt_rank(a.rank_);
  out.adopt_rank(b.rank_);
  const GAElem& small = a.size() <= b.size() ? a : b;
  const GAElem& large = a.size() <= b.size() ? b : a;
  for (const auto& [mu, c] : small.terms_) out.add_scaled(large, c, mu);
  return out;
}

bool GAElem::has_integral_support() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_integral(); });
}

bool GAElem::is_q_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_constant(); });
}

namespace {

struct Extent {
  int lo[Weight::kMaxRank];
  int hi[Weight::kMaxRank];
};

Extent extent(const GAElem& x) {
  Extent e;
  for (int i = 0; i < Weight::kMaxRank; ++i) {
    e.lo[i] = INT_MAX;
    e.hi[i] = INT_MIN;
  }
  for (const auto& [mu, c] : x.terms()) {
    for (int i = 0; i < mu.rank(); ++i) {
      e.lo[i] = std::min(e.lo[i], mu.doubled(i));
      e.hi[i] = std::max(e.hi[i], mu.doubled(i));
    }
  }
  return e;
}


std::optional<GAElem> div_by_q_free(const GAElem& num, const GAElem& den) {
  std::vector<std::pair<std::uint64_t, long long>> d;
  for (const auto& [mu, c] : den.terms()) {
    long long v;
    if (!c.is_constant() || !small_int(c.coeff(0), v)) return std::nullopt;
    d.emplace_back(mu.key(), v);
  }
  if (d.back().second != 1 && d.back().second != -1) return std::nullopt;
  std::map<int, IntTerms> parts;
  for (const auto& [mu, c] : num.terms())
    for (const auto& [e, x] : c.terms()) {
      long long v;
      if (!small_int(x, v)) return std::nullopt;
      parts[e].emplace(mu.key(), v);
    }
  const int n = den.rank();
  GAElem quot(n);
  std::vector<int> coords(n);
  for (auto& [e, part] : parts) {
    auto q = div_int(std::move(part), d, n);
    if (!q) return std::nullopt;
    for (const auto& [k, c] : *q) {
      for (int i = 0; i < n; ++i) coords[i] = key_coord(k, i);
      quot.add_term(Weight::from_doubled(coords), QLaurent::monomial(Rational(static_cast<long>(c)), e));
    }
  }
  return quot;
}

}  // namespace

GAElem ga_div_exact(const GAElem& num, const GAElem& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero group algebra element");
  GAElem quot(den.rank());
  if (num.is_zero()) return quot;
  if (num.rank() != den.rank()) throw Error(Errc::RankMismatch, "dividing elements of different rank");

  // Any exact quotient lies in the coordinate box below and above the lex
  // floor, so leaving either proves the division inexact and ends the loop.
  const int n = den.rank();
  const Extent en = extent(num);
  const Extent ed = extent(den);
  const Weight floor = num.terms().begin()->first - den.terms().begin()->first;
  auto inside = [&](const Weight& w) {
    for (int i = 0; i < n; ++i) {
      int d = w.doubled(i);
      if (d < en.lo[i] - ed.lo[i] || d > en.hi[i] - ed.hi[i]) return false;
    }
    return !(w < floor);
  };

  if (den.size() > 1)
    if (auto fast = div_by_q_free(num, den)) return *fast;

  if (den.size() == 1) {
    const auto& [nu, c] = *den.terms().begin();
    for (const auto& [mu, a] : num.terms()) quot.add_term(mu - nu, ql_div_exact(a, c));
    return quot;
  }

  GAElem rem = num;
  const Weight& lead = den.leading_weight();
  const QLaurent& lead_c = den.leading_coeff();
  const bool unit_lead = lead_c == QLaurent(1);
  while (!rem.is_zero()) {
    Weight w = rem.leading_weight() - lead;
    if (!inside(w)) throw Error(Errc::NotDivisible, "remainder survives lexicographic division");
    QLaurent c = unit_lead ? rem.leading_coeff() : ql_div_exact(rem.leading_coeff(), lead_c);
    quot.add_term(w, c);
    rem.add_scaled(den, -c, w);
  }
  return quot;
}

namespace {

// powers[i][d - lo] = base_i^d for every doubled exponent d in range.
struct PowerTable {
  std::vector<int> lo;
  std::vector<std::vector<Rational>> powers;

  PowerTable(const GAElem& x, std::span<const Rational> base) {
    const int n = static_cast<int>(base.size());
    Extent e = extent(x);
    lo.resize(n);
    powers.resize(n);
    for (int i = 0; i < n; ++i) {
      if (e.lo[i] > e.hi[i]) continue;
      lo[i] = e.lo[i];
      if (base[i] == 0 && e.lo[i] < 0) throw Error(Errc::ZeroBase, "negative power of a zero coordinate");
      for (int d = e.lo[i]; d <= e.hi[i]; ++d) powers[i].push_back(pow(base[i], d));
    }
  }

  const Rational& at(int i, int d) const { return powers[i][d - lo[i]]; }
};

}  // namespace

Rational ga_eval(const GAElem& x, const Rational& s, std::span<const Rational> half_point) {
  if (s == 0) throw Error(Errc::ZeroBase, "q^(1/4) evaluated at 0");
  if (x.is_zero()) return 0;
  if (static_cast<int>(half_point.size()) != x.rank())
    throw Error(Errc::LengthMismatch, "point of length " + std::to_string(half_point.size()) + " for rank " +
                                          std::to_string(x.rank()));
  for (const auto& p : half_point)
    if (p == 0) throw Error(Errc::ZeroBase, "zero evaluation coordinate");
  PowerTable table(x, half_point);
  int qlo = INT_MAX, qhi = INT_MIN;
  for (const auto& [mu, c] : x.terms()) {
    qlo = std::min(qlo, c.low());
    qhi = std::max(qhi, c.high());
  }
  std::vector<Rational> spow;
  for (int e = qlo; e <= qhi; ++e) spow.push_back(pow(s, e));
  Rational sum = 0;
  for (const auto& [mu, c] : x.terms()) {
    Rational v = 0;
    for (const auto& [e, a] : c.terms()) v += a * spow[e - qlo];
    for (int i = 0; i < mu.rank(); ++i) v *= table.at(i, mu.doubled(i));
    sum += v;
  }
  return sum;
}

bool rational_sqrt(const Rational& x, Rational& root) {
  if (x < 0) return false;
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

Rational ga_eval_full(const GAElem& x, const Rational& s, std::span<const Rational> point) {
  if (x.has_integral_support()) {
    // Halve the exponents instead of taking square roots.
    if (s == 0) throw Error(Errc::ZeroBase, "q^(1/4) evaluated at 0");
    if (x.is_zero()) return 0;
    if (static_cast<int>(point.size()) != x.rank()) throw Error(Errc::LengthMismatch, "point length");
    GAElem halved(x.rank());
    std::vector<int> d(x.rank());
    for (const auto& [mu, c] : x.terms()) {
      for (int i = 0; i < mu.rank(); ++i) d[i] = mu.doubled(i) / 2;
      halved.add_term(Weight::from_doubled(d), c);
    }
    return ga_eval(halved, s, point);
  }
  std::vector<Rational> half(point.size());
  for (std::size_t i = 0; i < point.size(); ++i)
    if (!rational_sqrt(point[i], half[i]))
      throw Error(Errc::GridMismatch, "half-integer weights need square point coordinates");
  return ga_eval(x, s, half);
}

std::string to_string(const GAElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [mu, c] : x.terms()) {
    std::string cs = to_string(c);
    bool negative = false;
    if (c.size() > 1) {
      cs = "(" + cs + ")";
    } else if (cs[0] == '-') {
      negative = true;
      cs.erase(0, 1);
    }
    if (!mu.is_zero()) cs = (cs == "1" ? "" : cs + "*") + "e^" + to_string(mu);
    if (out.empty())
      out = (negative ? "-" : "") + cs;
    else
      out += (negative ? " - " : " + ") + cs;
  }
  return out;
}

}  // namespace qcasimir
