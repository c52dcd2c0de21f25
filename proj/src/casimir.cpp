#include "qcasimir/casimir.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "qcasimir/characters.hpp"
#include "qcasimir/errors.hpp"
#include "qcasimir/weyl_group.hpp"

namespace qcasimir {

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Antisymmetrizer: return "antisymmetrizer";
    case Provenance::HookExpansion: return "hook_expansion";
    case Provenance::BinomialTransform: return "binomial_transform";
  }
  return "?";
}

namespace {

void require_k(int k) {
  if (k < 0) throw Error(Errc::IndexOutOfRange, "k must be non-negative");
}

std::mutex& memo_mutex() {
  static std::mutex mu;
  return mu;
}

using MemoKey = std::tuple<LieType, int, int>;

template <class F>
CasimirImage memoised(std::map<MemoKey, CasimirImage>& memo, const RootSystem& rs, int k, F compute) {
  MemoKey key{rs.type, rs.rank, k};
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  CasimirImage img = compute();
  std::lock_guard<std::mutex> lock(memo_mutex());
  memo.emplace(key, img);
  return img;
}

}  // namespace

GAElem h_element(const RootSystem& rs, int k) {
  require_k(k);
  const Weight e1 = Weight::unit(rs.rank, 0);
  GAElem h = GAElem::monomial(rs.rho + k * e1);
  for (const auto& alpha : rs.positive_roots) {
    Rational p = pairing(alpha, e1);
    if (p <= 0) continue;
    GAElem factor = GAElem::constant(QLaurent(1), rs.rank);
    factor.add_term(-alpha, -QLaurent::q_pow(-2 * static_cast<int>(p.get_num().get_si())));
    h = h * factor;
  }
  return h;
}

CasimirImage ch_g_via_antisym(const RootSystem& rs, int k) {
  require_k(k);
  static std::map<MemoKey, CasimirImage> memo;
  return memoised(memo, rs, k, [&] {
    const GAElem& delta = weyl_denominator(rs, DenominatorMode::Alternant);
    GAElem num = antisymmetrize(h_element(rs, k), rs) * QLaurent::q_pow(rs.c_n - 1);
    if (rs.type == LieType::B) num += delta * QLaurent::q_pow(-k);
    CasimirImage img;
    img.type = rs.type;
    img.rank = rs.rank;
    img.index = k;
    img.provenance = Provenance::Antisymmetrizer;
    img.body = ga_div_exact(num, delta);
    return img;
  });
}

namespace {

struct HookTerm {
  int r = 0;
  bool bar = false;
  int sign = 1;
  int q_exp = 0;  // absolute power of q
};

struct HookExpansion {
  QLaurent constant;
  std::vector<HookTerm> terms;
};

HookExpansion hook_expansion(const RootSystem& rs, int k) {
  require_k(k);
  const int n = rs.rank;
  HookExpansion ex;
  auto alt = [](int r) { return r % 2 ? -1 : 1; };
  switch (rs.type) {
    case LieType::B:
      if (k == 0) {
        ex.constant = QLaurent(1);
        for (int r = 0; r <= 2 * n - 1; ++r) ex.constant += QLaurent::q_pow(2 * n - 2 * r - 1);
        return ex;
      }
      if (!(k % 2 == 1 && k <= 2 * n - 1)) ex.constant = QLaurent::q_pow(-k);
      for (int r = 0; r <= std::min(k - 1, 2 * n - 1); ++r) ex.terms.push_back({r, false, alt(r), 2 * n - 2 * r - 1});
      return ex;
    case LieType::C:
      if (k == 0) {
        for (int r = 0; r <= n - 1; ++r) ex.constant += QLaurent::q_pow(2 * n - 2 * r);
        for (int r = n + 1; r <= 2 * n; ++r) ex.constant += QLaurent::q_pow(2 * n - 2 * r);
        return ex;
      }
      if (k % 2 == 0 && k <= 2 * n) ex.constant = -QLaurent::q_pow(-k);
      for (int r = 0; r <= std::min(k - 1, 2 * n); ++r) {
        int t = tau(rs, r);
        if (t != 0) ex.terms.push_back({r, false, alt(r) * t, 2 * n - 2 * r});
      }
      return ex;
    case LieType::D:
      if (k == 0) {
        ex.constant = QLaurent(1);
        for (int r = 0; r <= 2 * n - 2; ++r) ex.constant += QLaurent::q_pow(2 * n - 2 - 2 * r);
        return ex;
      }
      if (k % 2 == 0 && k <= 2 * n - 2) ex.constant = QLaurent::q_pow(-k);
      for (int r = 0; r <= std::min(k - 1, 2 * n - 2); ++r) {
        ex.terms.push_back({r, false, alt(r), 2 * n - 2 - 2 * r});
        if (r == n - 1) ex.terms.push_back({r, true, alt(r), 2 * n - 2 - 2 * r});
      }
      return ex;
  }
  return ex;
}

}  // namespace

CasimirImage ch_g_via_hooks(const RootSystem& rs, int k) {
  require_k(k);
  static std::map<MemoKey, CasimirImage> memo;
  return memoised(memo, rs, k, [&] {
    HookExpansion ex = hook_expansion(rs, k);
    CasimirImage img;
    img.type = rs.type;
    img.rank = rs.rank;
    img.index = k;
    img.provenance = Provenance::HookExpansion;
    img.body = GAElem::constant(ex.constant, rs.rank);
    for (const auto& t : ex.terms) {
      GAElem chi = weyl_character(rs, hook_weight(rs, k, t.r, t.bar).weight);
      img.body.add_scaled(chi, QLaurent::monomial(t.sign, 4 * t.q_exp), Weight(rs.rank));
    }
    return img;
  });
}

namespace {

// Values L_a for a in I_n, indexed a + n.
struct LValues {
  int n;
  std::vector<Rational> v;
  const Rational& operator[](int a) const { return v[a + n]; }
};

LValues l_values(const RootSystem& rs, std::span<const Rational> half_point) {
  const int n = rs.rank;
  if (static_cast<int>(half_point.size()) != n)
    throw Error(Errc::LengthMismatch, "point of length " + std::to_string(half_point.size()) + " for rank " +
                                          std::to_string(n));
  LValues L{n, std::vector<Rational>(2 * n + 1)};
  for (int a = 1; a <= n; ++a) {
    Rational x = half_point[a - 1] * half_point[a - 1];
    if (x == 0) throw Error(Errc::ZeroBase, "zero evaluation coordinate");
    L.v[n + a] = x;
    L.v[n - a] = 1 / x;
  }
  L.v[n] = 1;
  return L;
}

Rational checked_div(const Rational& a, const Rational& b, const char* what) {
  if (b == 0) throw Error(Errc::DegenerateEvaluation, what);
  return a / b;
}

Rational p_factor(const LValues& L, int a, const Rational& q) {
  Rational p = 1;
  for (int b = -L.n; b <= L.n; ++b) {
    if (b == 0 || b == a || b == -a) continue;
    p *= checked_div(q * L[a] - L[b] / q, L[a] - L[b], "L_a = L_b");
  }
  return p;
}

// The a-dependent prefactor of the type's rational form.
Rational type_prefactor(const RootSystem& rs, const LValues& L, int a, const Rational& q) {
  const Rational& x = L[a];
  switch (rs.type) {
    case LieType::B:
      return checked_div(q * x - 1 / (q * x) + q - 1 / q, x - 1 / x, "L_a = +-1");
    case LieType::C:
      return checked_div(q * q * x - 1 / (q * q * x), x - 1 / x, "L_a = +-1");
    case LieType::D:
      return 1;
  }
  return 1;
}

}  // namespace

Rational g_rational_eval(const RootSystem& rs, int k, const Rational& s, std::span<const Rational> half_point) {
  require_k(k);
  if (s == 0) throw Error(Errc::ZeroBase, "q^(1/4) evaluated at 0");
  const Rational q = pow(s, 4);
  LValues L = l_values(rs, half_point);
  Rational g = rs.type == LieType::B ? pow(q, -k) : Rational(0);
  for (int a = -rs.rank; a <= rs.rank; ++a) {
    if (a == 0) continue;
    g += type_prefactor(rs, L, a, q) * pow(L[a], k) * p_factor(L, a, q);
  }
  return g;
}

Rational c0_rational_eval(const RootSystem& rs, int ell, const Rational& s, std::span<const Rational> half_point) {
  if (ell < 1) throw Error(Errc::IndexOutOfRange, "the rational form needs l >= 1");
  if (s == 0) throw Error(Errc::ZeroBase, "q^(1/4) evaluated at 0");
  const Rational q = pow(s, 4);
  const Rational qq = q - 1 / q;
  if (qq == 0) throw Error(Errc::DegenerateEvaluation, "q - q^{-1} = 0");
  LValues L = l_values(rs, half_point);
  const Rational shift = pow(q, 1 - rs.c_n);
  Rational c = 0;
  for (int a = -rs.rank; a <= rs.rank; ++a) {
    if (a == 0) continue;
    c += type_prefactor(rs, L, a, q) * pow((shift * L[a] - 1) / qq, ell) * p_factor(L, a, q);
  }
  if (rs.type == LieType::B) c += pow((pow(q, -2 * rs.rank) - 1) / qq, ell);
  return c;
}

bool divisible_by_hc_factor(const GAElem& x, int p) {
  const QLaurent d = (QLaurent::q_pow(-1) - QLaurent::q_pow(1)).pow(p);
  try {
    for (const auto& [mu, c] : x.terms()) (void)ql_div_exact(c, d);
  } catch (const Error& e) {
    if (e.code() == Errc::NotDivisible) return false;
    throw;
  }
  return true;
}

CasimirImage hc_image(const RootSystem& rs, int ell) {
  if (ell < 0) throw Error(Errc::IndexOutOfRange, "l must be non-negative");
  static std::map<MemoKey, CasimirImage> memo;
  return memoised(memo, rs, ell, [&] {
    GAElem num(rs.rank);
    const QLaurent step = -QLaurent::q_pow(1 - rs.c_n);
    QLaurent factor(1);
    for (int k = 0; k <= ell; ++k) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), ell, k);
      num.add_scaled(ch_g_via_antisym(rs, k).body, factor * QLaurent(Rational(b)), Weight(rs.rank));
      factor *= step;
    }
    const QLaurent d = QLaurent::q_pow(-1) - QLaurent::q_pow(1);
    int remaining = ell;
    while (remaining > 0 && divisible_by_hc_factor(num, 1)) {
      GAElem next(rs.rank);
      for (const auto& [mu, c] : num.terms()) next.add_term(mu, ql_div_exact(c, d));
      num = std::move(next);
      --remaining;
    }
    CasimirImage img;
    img.type = rs.type;
    img.rank = rs.rank;
    img.index = ell;
    img.provenance = Provenance::BinomialTransform;
    img.body = std::move(num);
    img.denominator_power = remaining;
    return img;
  });
}

std::vector<Rational> highest_weight_point(const RootSystem& rs, const Weight& lam, const Rational& s) {
  Weight shifted = lam + rs.rho;
  std::vector<Rational> pt(rs.rank);
  for (int i = 0; i < rs.rank; ++i) pt[i] = pow(s, 2 * shifted.doubled(i));
  return pt;
}

Rational eigenvalue_via_hc(const RootSystem& rs, const Weight& lam, int ell, const Rational& s) {
  if (!is_dominant(rs, lam)) throw Error(Errc::NotDominant, to_string(lam) + " is not dominant for " + rs.name());
  if (s == 0) throw Error(Errc::ZeroBase, "q^(1/4) evaluated at 0");
  const CasimirImage img = hc_image(rs, ell);
  // Every coordinate of the point is a power of s, so collect the body as one
  // Laurent polynomial in s first.
  const Weight shifted = lam + rs.rho;
  std::map<long, Rational> collected;
  for (const auto& [mu, c] : img.body.terms()) {
    long base = 0;
    for (int i = 0; i < rs.rank; ++i) base += 2L * shifted.doubled(i) * mu.doubled(i);
    for (const auto& [e, x] : c.terms()) collected[base + e] += x;
  }
  Rational num = 0;
  for (const auto& [e, x] : collected)
    if (x != 0) num += x * pow(s, e);
  const QLaurent d = (QLaurent::q_pow(-1) - QLaurent::q_pow(1)).pow(img.denominator_power);
  return checked_div(num, ql_eval(d, s), "q^{-1} - q = 0");
}

namespace {

// Truncated Laurent series sum_{i} c[i] eps^{val+i}, known for exponents < order.
struct Series {
  static constexpr int kExact = INT_MAX / 4;
  int val = 0;
  int order = kExact;
  std::vector<Rational> c;

  static Series constant(const Rational& x) {
    Series s;
    if (x != 0) s.c.push_back(x);
    else s.val = s.order;
    return s;
  }

  bool known_zero() const { return c.empty(); }

  void normalise() {
    std::size_t z = 0;
    while (z < c.size() && c[z] == 0) ++z;
    c.erase(c.begin(), c.begin() + static_cast<long>(z));
    val += static_cast<int>(z);
    if (order != kExact && val + static_cast<int>(c.size()) > order) c.resize(std::max(0, order - val));
    if (c.empty()) val = order;
  }
};

Series operator*(const Series& a, const Series& b) {
  Series out;
  int ord_a = a.order == Series::kExact ? Series::kExact : a.order + b.val;
  int ord_b = b.order == Series::kExact ? Series::kExact : b.order + a.val;
  out.order = std::min(ord_a, ord_b);
  if (a.known_zero() || b.known_zero()) {
    out.val = out.order;
    return out;
  }
  out.val = a.val + b.val;
  std::size_t len = a.c.size() + b.c.size() - 1;
  if (out.order != Series::kExact) len = std::min<std::size_t>(len, std::max(0, out.order - out.val));
  out.c.assign(len, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size() && i + j < len; ++j) out.c[i + j] += a.c[i] * b.c[j];
  out.normalise();
  return out;
}

Series operator+(const Series& a, const Series& b) {
  Series out;
  out.order = std::min(a.order, b.order);
  if (a.known_zero() && b.known_zero()) {
    out.val = out.order;
    return out;
  }
  int lo = INT_MAX;
  int hi = INT_MIN;
  for (const Series* s : {&a, &b}) {
    if (s->known_zero()) continue;
    lo = std::min(lo, s->val);
    hi = std::max(hi, s->val + static_cast<int>(s->c.size()));
  }
  if (out.order != Series::kExact) hi = std::min(hi, out.order);
  out.val = lo;
  out.c.assign(std::max(0, hi - lo), 0);
  for (const Series* s : {&a, &b})
    for (std::size_t i = 0; i < s->c.size(); ++i) {
      int e = s->val + static_cast<int>(i);
      if (e < hi) out.c[e - lo] += s->c[i];
    }
  out.normalise();
  return out;
}

// 1 / a; relative precision is preserved.
Series inverse(const Series& a) {
  if (a.known_zero()) throw Error(Errc::DegenerateEvaluation, "division by a vanishing factor");
  const int prec = a.order == Series::kExact ? Series::kExact : a.order - a.val;
  Series out;
  out.val = -a.val;
  out.order = prec == Series::kExact ? Series::kExact : out.val + prec;
  if (prec == Series::kExact && a.c.size() > 1)
    throw Error(Errc::InvalidArgument, "inverse of an exact non-monomial series");
  const std::size_t len = prec == Series::kExact ? 1 : static_cast<std::size_t>(prec);
  out.c.assign(len, 0);
  out.c[0] = 1 / a.c[0];
  for (std::size_t i = 1; i < len; ++i) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= i && j < a.c.size(); ++j) acc += a.c[j] * out.c[i - j];
    out.c[i] = -acc / a.c[0];
  }
  out.normalise();
  return out;
}

// A (1+eps)^alpha - B (1+eps)^beta, known for exponents below `terms`.
Series binomial_difference(const Rational& A, int alpha, const Rational& B, int beta, int terms) {
  Series out;
  out.order = terms;
  out.c.assign(terms, 0);
  Rational ca = A;
  Rational cb = B;
  for (int j = 0; j < terms; ++j) {
    out.c[j] = ca - cb;
    ca = ca * (alpha - j) / (j + 1);
    cb = cb * (beta - j) / (j + 1);
  }
  out.normalise();
  return out;
}

// Term a of the formula evaluated at u = 1; nullopt when one of its
// denominators vanishes there.
std::optional<Rational> eigen_term_plain(const RootSystem& rs, const Weight& lam, int ell, const Rational& q, std::size_t i) {
  const Rational qq = q - 1 / q;
  const Weight two_shift = 2 * (rs.rho + lam);
  auto exps = [&](std::size_t j) {
    int a = rs.casimir_indices[j];
    int sq = a == 0 ? 0 : 1;
    int base = static_cast<int>(pairing(natural_weight(rs, a), two_shift).get_num().get_si());
    return std::make_pair(base + sq, base - sq);
  };
  const int a = rs.casimir_indices[i];
  const Rational qx = pow(q, exps(i).first);
  Rational term = pow(q, rs.c_n - (a == 0 ? 0 : 1));
  const Rational denom = qx * qx - 1;
  if (!(rs.type == LieType::B && a == 0)) {
    if (denom == 0) return std::nullopt;
    switch (rs.type) {
      case LieType::B: term *= 1 + qq * qx / denom; break;
      case LieType::C: term *= 1 + (1 - 1 / (q * q)) / denom; break;
      case LieType::D: term *= 1 + (1 - q * q) / denom; break;
    }
  }
  term *= pow((qx / pow(q, rs.c_n) - 1) / qq, ell);
  for (std::size_t j = 0; j < rs.casimir_indices.size(); ++j) {
    if (j == i) continue;
    auto [xb, yb] = exps(j);
    const Rational d = qx - pow(q, xb);
    if (d == 0) return std::nullopt;
    term *= (qx - pow(q, yb)) / d;
  }
  return term;
}

std::optional<Rational> eigenvalue_direct_at_precision(const RootSystem& rs, const Weight& lam, int ell, const Rational& s,
                                        int prec) {
  const int n = rs.rank;
  const Rational q = pow(s, 4);
  if (q == 1) throw Error(Errc::DegenerateEvaluation, "q - q^{-1} = 0");
  const Rational qq = q - 1 / q;
  const Weight two_shift = 2 * (rs.rho + lam);

  // Exponents (eps_a, 2rho + 2lam +- eps_a) and perturbation weights (eps_a, delta)
  // with delta = (n, n-1, ..., 1), for a in I'_n.
  struct Index {
    int a;
    int x;
    int y;
    int d;
  };
  std::vector<Index> idx;
  for (int a : rs.casimir_indices) {
    Weight ea = natural_weight(rs, a);
    int sq = a == 0 ? 0 : 1;
    int base = static_cast<int>(pairing(ea, two_shift).get_num().get_si());
    int d = a == 0 ? 0 : (a > 0 ? 1 : -1) * (n - std::abs(a) + 1);
    idx.push_back({a, base + sq, base - sq, d});
  }

  auto qpow = [&](int e) { return pow(q, e); };
  // q^{x} u^{d} - q^{y} u^{e} as a series in eps = u - 1.
  auto diff = [&](int x, int d, int y, int e) { return binomial_difference(qpow(x), d, qpow(y), e, prec + 2); };
  auto mono = [&](int x, int d) { return binomial_difference(qpow(x), d, 0, 0, prec + 2); };

  Series total = Series::constant(0);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const Index& ia = idx[i];
    // A regular term contributes its value; only singular terms need the expansion.
    if (auto v = eigen_term_plain(rs, lam, ell, q, i)) {
      total = total + Series::constant(*v);
      continue;
    }
    Series term = Series::constant(qpow(rs.c_n - (ia.a == 0 ? 0 : 1)));

    Series f = Series::constant(1);
    Series denom = diff(2 * ia.x, 2 * ia.d, 0, 0);
    switch (rs.type) {
      case LieType::B:
        if (ia.a != 0) f = f + Series::constant(qq) * mono(ia.x, ia.d) * inverse(denom);
        break;
      case LieType::C:
        f = f + Series::constant(1 - 1 / (q * q)) * inverse(denom);
        break;
      case LieType::D:
        f = f + Series::constant(1 - q * q) * inverse(denom);
        break;
    }
    term = term * f;

    Series power = Series::constant(1);
    Series base = diff(ia.x - rs.c_n, ia.d, 0, 0) * Series::constant(1 / qq);
    for (int i = 0; i < ell; ++i) power = power * base;
    term = term * power;

    for (const auto& ib : idx) {
      if (ib.a == ia.a) continue;
      term = term * diff(ia.x, ia.d, ib.y, ib.d) * inverse(diff(ia.x, ia.d, ib.x, ib.d));
    }
    total = total + term;
  }

  if (total.order <= 0) return std::nullopt;
  for (std::size_t i = 0; i < total.c.size(); ++i) {
    int e = total.val + static_cast<int>(i);
    if (e < 0 && total.c[i] != 0) throw Error(Errc::DegenerateEvaluation, "the eigenvalue formula has a pole here");
    if (e == 0) return total.c[i];
  }
  return 0;
}

}  // namespace

Rational eigenvalue_direct(const RootSystem& rs, const Weight& lam, int ell, const Rational& s) {
  if (ell < 0) throw Error(Errc::IndexOutOfRange, "l must be non-negative");
  if (s == 0) throw Error(Errc::ZeroBase, "q^(1/4) evaluated at 0");
  if (!is_dominant(rs, lam)) throw Error(Errc::NotDominant, to_string(lam) + " is not dominant for " + rs.name());
  for (int prec = 2 * rs.rank + 4;; prec *= 2)
    if (auto v = eigenvalue_direct_at_precision(rs, lam, ell, s, prec)) return *v;
}

std::vector<Constituent> constituents(const RootSystem& rs, int k) {
  if (k < 1 || k > rs.rank)
    throw Error(Errc::IndexOutOfRange, "constituents need 1 <= k <= n, got k = " + std::to_string(k));
  HookExpansion ex = hook_expansion(rs, k);
  std::vector<Constituent> out;
  for (const auto& [e, c] : ex.constant.terms()) {
    Constituent cc;
    cc.constant = true;
    cc.q_power = e / 4;
    cc.multiplicity = static_cast<int>(c.get_num().get_si());
    out.push_back(cc);
  }
  for (const auto& t : ex.terms) {
    Constituent cc;
    cc.q_power = t.q_exp - 2 * rs.rank;
    cc.bar = t.bar;
    cc.multiplicity = t.sign;
    Weight w = hook_weight(rs, k, t.r, t.bar).weight;
    for (int i = 0; i < rs.rank; ++i) {
      int d = std::abs(w.doubled(i)) / 2;
      if (d != 0) cc.partition.push_back(d);
    }
    out.push_back(cc);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Constituent& c) {
  std::string out = c.multiplicity < 0 ? "-" : "+";
  if (c.constant) return out + "q^" + std::to_string(c.q_power);
  out += "q^(2n";
  if (c.q_power < 0) out += std::to_string(c.q_power);
  else if (c.q_power > 0) out += "+" + std::to_string(c.q_power);
  out += ")*chi(";
  for (std::size_t i = 0; i < c.partition.size(); ++i) out += (i ? "," : "") + std::to_string(c.partition[i]);
  return out + (c.bar ? ")bar" : ")");
}

}  // namespace qcasimir
