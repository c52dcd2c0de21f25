#include "qcasimir/qlaurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qcasimir/errors.hpp"

namespace qcasimir {

QLaurent::QLaurent(long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

QLaurent::QLaurent(const Rational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

QLaurent QLaurent::monomial(const Rational& c, int quarter) {
  QLaurent out;
  if (c != 0) out.terms_.emplace_back(quarter, c);
  return out;
}

QLaurent QLaurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  QLaurent out;
  for (auto& [e, c] : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == e)
      out.terms_.back().second += c;
    else
      out.terms_.emplace_back(e, std::move(c));
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.second == 0; });
  return out;
}

bool QLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rational QLaurent::coeff(int quarter) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), quarter,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == quarter) return it->second;
  return 0;
}

void QLaurent::add_scaled(const QLaurent& o, const Rational& c, int quarter) {
  if (o.terms_.empty() || c == 0) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first + quarter)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->first + quarter < a->first) {
      merged.emplace_back(b->first + quarter, c * b->second);
      ++b;
    } else {
      Rational sum = a->second + c * b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  add_scaled(o, 1, 0);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  add_scaled(o, -1, 0);
  return *this;
}

QLaurent& QLaurent::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
  *this = *this * o;
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) {
    QLaurent out = b.shifted(a.terms_[0].first);
    return out *= a.terms_[0].second;
  }
  if (b.size() == 1) {
    QLaurent out = a.shifted(b.terms_[0].first);
    return out *= b.terms_[0].second;
  }
  int lo = a.low() + b.low();
  int span = a.high() + b.high() - lo + 1;
  QLaurent out;
  if (span <= 4 * static_cast<int>(a.size() * b.size()) + 64) {
    std::vector<Rational> dense(span);
    std::vector<char> touched(span, 0);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        int idx = ea + eb - lo;
        dense[idx] += ca * cb;
        touched[idx] = 1;
      }
    for (int i = 0; i < span; ++i)
      if (touched[i] && dense[i] != 0) out.terms_.emplace_back(i + lo, std::move(dense[i]));
    return out;
  }
  std::map<int, Rational> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  for (auto& [e, c] : acc)
    if (c != 0) out.terms_.emplace_back(e, std::move(c));
  return out;
}

QLaurent operator-(QLaurent a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

QLaurent QLaurent::shifted(int quarter) const {
  QLaurent out = *this;
  for (auto& t : out.terms_) t.first += quarter;
  return out;
}

QLaurent QLaurent::pow(unsigned e) const {
  QLaurent result(1);
  QLaurent base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::strong_ordering compare(const QLaurent& a, const QLaurent& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a.terms_[i].first <=> b.terms_[i].first; c != 0) return c;
    int s = cmp(a.terms_[i].second, b.terms_[i].second);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

QLaurent ql_div_exact(const QLaurent& a, const QLaurent& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "Laurent division by zero");
  if (a.is_zero()) return {};
  if (b.size() == 1) {
    QLaurent out = a.shifted(-b.high());
    return out *= Rational(1) / b.leading_coeff();
  }
  // The quotient's support lies in [low(a) - low(b), high(a) - high(b)].
  const int floor = a.low() - b.low();
  QLaurent rem = a;
  std::vector<QLaurent::Term> quot;
  const Rational inv_lead = Rational(1) / b.leading_coeff();
  while (!rem.is_zero()) {
    int e = rem.high() - b.high();
    if (e < floor) throw Error(Errc::NotDivisible, to_string(a) + " by " + to_string(b));
    Rational c = rem.leading_coeff() * inv_lead;
    rem.add_scaled(b, -c, e);
    quot.emplace_back(e, std::move(c));
  }
  std::reverse(quot.begin(), quot.end());
  return QLaurent::from_terms(std::move(quot));
}

Rational ql_eval(const QLaurent& a, const Rational& s) {
  if (s == 0) throw Error(Errc::ZeroBase, "q^(1/4) evaluated at 0");
  Rational sum = 0;
  for (const auto& [e, c] : a.terms()) sum += c * pow(s, e);
  return sum;
}

std::string to_string(const QLaurent& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e != 4) {
      Rational ex(e, 4);
      ex.canonicalize();
      if (is_integer(ex) && ex > 0)
        os << "^" << ex.get_str();
      else
        os << "^(" << ex.get_str() << ")";
    }
  }
  return os.str();
}

}  // namespace qcasimir
