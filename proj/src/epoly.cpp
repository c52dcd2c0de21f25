#include "qcasimir/epoly.hpp"

#include <sstream>

#include "qcasimir/errors.hpp"

namespace qcasimir {

namespace {

void check_symbols(int a, int b) {
  if (a != b) throw Error(Errc::LengthMismatch, "EPoly symbol counts differ");
}

}  // namespace

void EPoly::adopt_symbols(const EPoly& o) {
  if (nsym_ == 0 && terms_.empty()) {
    nsym_ = o.nsym_;
    return;
  }
  if (o.nsym_ == 0 && o.terms_.empty()) return;
  check_symbols(nsym_, o.nsym_);
}

EPoly EPoly::constant(const QLaurent& c, int num_symbols) {
  EPoly out(num_symbols);
  if (!c.is_zero()) out.terms_.emplace(Monomial(num_symbols, 0), c);
  return out;
}

EPoly EPoly::symbol(int i, int num_symbols) {
  if (i < 0 || i >= num_symbols) throw Error(Errc::IndexOutOfRange, "symbol index");
  Monomial m(num_symbols, 0);
  m[i] = 1;
  return monomial(QLaurent(1), std::move(m));
}

EPoly EPoly::monomial(const QLaurent& c, Monomial exps) {
  EPoly out(static_cast<int>(exps.size()));
  if (!c.is_zero()) out.terms_.emplace(std::move(exps), c);
  return out;
}

QLaurent EPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QLaurent() : it->second;
}

int EPoly::degree_in(int i) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
  return d;
}

bool EPoly::depends_only_on_first(int count) const {
  for (const auto& [m, c] : terms_)
    for (int i = count; i < nsym_; ++i)
      if (m[i] != 0) return false;
  return true;
}

EPoly& EPoly::operator+=(const EPoly& o) {
  adopt_symbols(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

EPoly& EPoly::operator-=(const EPoly& o) {
  adopt_symbols(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

EPoly& EPoly::operator*=(const QLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

EPoly operator*(const EPoly& a, const EPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return EPoly(std::max(a.nsym_, b.nsym_));
  }
  check_symbols(a.nsym_, b.nsym_);
  EPoly out(a.nsym_);
  EPoly::Monomial m(a.nsym_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.nsym_; ++i) m[i] = ma[i] + mb[i];
      QLaurent prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(m, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  return out;
}

bool operator==(const EPoly& a, const EPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.nsym_ == b.nsym_ && a.terms_ == b.terms_;
}

EPoly EPoly::pow(unsigned e) const {
  EPoly result = constant(QLaurent(1), nsym_);
  EPoly base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

EPoly EPoly::partial(int i) const {
  if (i < 0 || i >= nsym_) throw Error(Errc::IndexOutOfRange, "partial: symbol index");
  EPoly out(nsym_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    QLaurent v = c;
    v *= Rational(m[i]);
    out.terms_.emplace(std::move(d), std::move(v));
  }
  return out;
}

EPoly EPoly::substitute(const std::vector<EPoly>& images) const {
  if (static_cast<int>(images.size()) != nsym_)
    throw Error(Errc::LengthMismatch, "substitute: need one image per symbol");
  int target = 0;
  for (const auto& img : images) target = std::max(target, img.num_symbols());
  EPoly one = constant(QLaurent(1), target);
  EPoly sum(target);
  // Powers are reused across terms.
  std::vector<std::vector<EPoly>> powers(nsym_, std::vector<EPoly>{one});
  for (const auto& [m, c] : terms_) {
    EPoly term = constant(c, target);
    for (int i = 0; i < nsym_; ++i) {
      while (static_cast<int>(powers[i].size()) <= m[i])
        powers[i].push_back(powers[i].back() * images[i]);
      if (m[i] > 0) term = term * powers[i][m[i]];
    }
    sum += term;
  }
  return sum;
}

EPoly epoly_div_exact(const EPoly& a, const EPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "EPoly division by zero");
  if (a.is_zero()) return EPoly(b.num_symbols());
  check_symbols(a.num_symbols(), b.num_symbols());
  const int n = b.num_symbols();
  // std::map orders monomials lexicographically; the last entry leads.
  const auto& [lead_m, lead_c] = *b.terms().rbegin();
  EPoly rem = a;
  EPoly quot(n);
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().rbegin();
    EPoly::Monomial shift(n);
    for (int i = 0; i < n; ++i) {
      shift[i] = rm[i] - lead_m[i];
      if (shift[i] < 0) throw Error(Errc::NotDivisible, "EPoly leading monomial not divisible");
    }
    EPoly t = EPoly::monomial(ql_div_exact(rc, lead_c), shift);
    rem -= t * b;
    quot += t;
  }
  return quot;
}

std::string to_string(const EPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coef = to_string(c);
    bool unit = true;
    for (int e : m) unit = unit && e == 0;
    if (!first) os << " + ";
    first = false;
    if (unit) {
      os << coef;
      continue;
    }
    if (coef != "1") os << (c.size() > 1 ? "(" + coef + ")" : coef) << "*";
    bool first_sym = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first_sym) os << "*";
      first_sym = false;
      os << (i < names.size() ? names[i] : "X" + std::to_string(i + 1));
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

}  // namespace qcasimir
