#include "qcasimir/render.hpp"

#include <sstream>

namespace qcasimir {

std::string latex(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  std::string sign = r < 0 ? "-" : "";
  Integer num = abs(r.get_num());
  return sign + "\\tfrac{" + num.get_str() + "}{" + r.get_den().get_str() + "}";
}

namespace {

std::string q_power(int quarter) {
  if (quarter == 0) return "";
  Rational e(quarter, 4);
  e.canonicalize();
  if (e == 1) return "q";
  std::string body = is_integer(e) ? e.get_num().get_str() : e.get_num().get_str() + "/" + e.get_den().get_str();
  return "q^{" + body + "}";
}

// Appends c * tail with the sign folded into the separator.
void append_term(std::string& out, const Rational& c, const std::string& tail) {
  Rational mag = abs(c);
  std::string body = tail.empty() ? latex(mag) : (mag == 1 ? tail : latex(mag) + tail);
  if (out.empty())
    out = (c < 0 ? "-" : "") + body;
  else
    out += (c < 0 ? " - " : " + ") + body;
}

}  // namespace

std::string latex(const QLaurent& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) append_term(out, it->second, q_power(it->first));
  return out;
}

std::string latex(const Weight& w) {
  std::string out;
  const auto coords = w.coords();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    append_term(out, coords[i], "\\varepsilon_{" + std::to_string(i + 1) + "}");
  }
  return out.empty() ? "0" : out;
}

std::string latex(const GAElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [mu, c] = *it;
    std::string e = mu.is_zero() ? "" : "e^{" + latex(mu) + "}";
    if (c.size() == 1) {
      const auto& [qe, r] = c.terms().front();
      append_term(out, r, q_power(qe) + e);
    } else {
      std::string body = "(" + latex(c) + ")" + e;
      out += out.empty() ? body : " + " + body;
    }
  }
  return out;
}

std::string latex(const EPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      mono += names[i];
      if (m[i] > 1) mono += "^{" + std::to_string(m[i]) + "}";
    }
    if (c.size() == 1) {
      const auto& [qe, r] = c.terms().front();
      append_term(out, r, q_power(qe) + mono);
    } else {
      std::string body = "(" + latex(c) + ")" + mono;
      out += out.empty() ? body : " + " + body;
    }
  }
  return out;
}

std::string latex_roots(const RootSystem& rs) {
  std::ostringstream os;
  os << "\\begin{tabular}{rl}\n";
  os << "\\multicolumn{2}{l}{$\\Phi^+(" << rs.name() << ")$, " << rs.positive_roots.size() << " roots} \\\\\n";
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    os << i + 1 << " & $" << latex(rs.positive_roots[i]) << "$ \\\\\n";
  os << "\\hline\n$\\rho$ & $" << latex(rs.rho) << "$ \\\\\n";
  for (std::size_t i = 0; i < rs.fundamental_weights.size(); ++i)
    os << "$\\varpi_{" << i + 1 << "}$ & $" << latex(rs.fundamental_weights[i]) << "$ \\\\\n";
  os << "\\end{tabular}\n";
  return os.str();
}

std::string text_roots(const RootSystem& rs) {
  std::ostringstream os;
  os << rs.name() << ": " << rs.positive_roots.size() << " positive roots, c_n = " << rs.c_n
     << ", natural module of dimension " << rs.dim_natural << "\n";
  os << "rho = " << to_string(rs.rho) << "\n";
  for (std::size_t i = 0; i < rs.simple_roots.size(); ++i)
    os << "alpha_" << i + 1 << " = " << to_string(rs.simple_roots[i]) << "\n";
  for (std::size_t i = 0; i < rs.fundamental_weights.size(); ++i)
    os << "w_" << i + 1 << " = " << to_string(rs.fundamental_weights[i]) << "\n";
  os << "positive roots:";
  for (const auto& a : rs.positive_roots) os << " " << to_string(a);
  os << "\n";
  return os.str();
}

}  // namespace qcasimir
