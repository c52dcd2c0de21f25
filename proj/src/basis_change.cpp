#include "qcasimir/basis_change.hpp"

#include <algorithm>
#include <map>

#include "qcasimir/casimir.hpp"
#include "qcasimir/characters.hpp"
#include "qcasimir/errors.hpp"

namespace qcasimir {

Partition conjugate(const Partition& lam) {
  Partition out;
  int first = lam.empty() ? 0 : *std::max_element(lam.begin(), lam.end());
  for (int j = 1; j <= first; ++j) {
    int c = 0;
    for (int x : lam) c += x >= j;
    out.push_back(c);
  }
  return out;
}

namespace {

Partition trimmed(const RootSystem& rs, const Partition& lam) {
  Partition p;
  for (int x : lam) {
    if (x < 0) throw Error(Errc::InvalidArgument, "partition parts must be non-negative");
    if (x > 0) p.push_back(x);
  }
  if (!std::is_sorted(p.rbegin(), p.rend())) throw Error(Errc::InvalidArgument, "partition parts must be non-increasing");
  if (static_cast<int>(p.size()) > rs.rank)
    throw Error(Errc::PartitionTooLong, "partition with " + std::to_string(p.size()) + " parts for rank " +
                                            std::to_string(rs.rank));
  return p;
}

// Halves every coefficient; false if some coefficient is not an even integer.
bool halve(QLaurent& c) {
  std::vector<QLaurent::Term> terms;
  for (const auto& [e, x] : c.terms()) {
    if (!is_integer(x) || !mpz_even_p(x.get_num().get_mpz_t())) return false;
    terms.emplace_back(e, x / 2);
  }
  c = QLaurent::from_terms(std::move(terms));
  return true;
}

template <class R, class Entry>
Matrix<R> jt_matrix(const RootSystem& rs, const Partition& lam, Entry e) {
  Partition conj = conjugate(trimmed(rs, lam));
  const int m = static_cast<int>(conj.size());
  Matrix<R> out(m, m);
  for (int i = 1; i <= m; ++i) {
    int li = conj[i - 1];
    for (int j = 1; j <= m; ++j) {
      if (rs.type == LieType::C)
        out(i - 1, j - 1) = e(li - i + j) - e(li - i - j);
      else
        out(i - 1, j - 1) = e(li - i + j) + e(li - i - j + 2);
    }
  }
  return out;
}

}  // namespace

Weight partition_weight(const RootSystem& rs, const Partition& lam) {
  Partition p = trimmed(rs, lam);
  std::vector<int> c(rs.rank, 0);
  std::copy(p.begin(), p.end(), c.begin());
  return Weight::from_ints(c);
}

EPoly e_symbol(const RootSystem& rs, int r) {
  const int n = rs.rank;
  const int d = rs.dim_natural;
  if (r < 0 || r > d) return EPoly(n);
  if (r > n) r = d - r;
  if (r == 0) return EPoly::constant(QLaurent(1), n);
  return EPoly::symbol(r - 1, n);
}

Matrix<GAElem> jt_matrix_ga(const RootSystem& rs, const Partition& lam) {
  std::map<int, GAElem> cache;
  auto e = [&](int r) {
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, ext_power_char(rs, r)).first;
    return it->second;
  };
  return jt_matrix<GAElem>(rs, lam, e);
}

Matrix<EPoly> jt_matrix_e(const RootSystem& rs, const Partition& lam) {
  return jt_matrix<EPoly>(rs, lam, [&](int r) { return e_symbol(rs, r); });
}

Matrix<EPoly> hook_matrix_e(const RootSystem& rs, int k, int r) {
  if (r < 0 || k - r < 1 || r > rs.rank - 1) throw Error(Errc::InvalidArgument, "hook needs k - r >= 1 and 0 <= r <= n-1");
  const int m = k - r;
  Matrix<EPoly> out(m, m);
  for (int j = 1; j <= m; ++j) {
    if (rs.type == LieType::C)
      out(0, j - 1) = e_symbol(rs, r + j) - e_symbol(rs, r - j);
    else
      out(0, j - 1) = j == 1 ? e_symbol(rs, r + 1) : e_symbol(rs, r + j) + e_symbol(rs, r - j + 2);
  }
  for (int i = 2; i <= m; ++i)
    for (int j = 1; j <= m; ++j) out(i - 1, j - 1) = e_symbol(rs, j - i + 1);
  return out;
}

GAElem jt_character_ga(const RootSystem& rs, const Partition& lam) {
  Matrix<GAElem> m = jt_matrix_ga(rs, lam);
  if (m.rows() == 0) return GAElem::constant(QLaurent(1), rs.rank);
  GAElem det = det_exact(m);
  if (rs.type == LieType::C) return det;
  GAElem half(rs.rank);
  for (const auto& [mu, c] : det.terms()) {
    QLaurent h = c;
    if (!halve(h)) throw Error(Errc::HalvingFailed, "odd coefficient at e^" + to_string(mu));
    half.add_term(mu, h);
  }
  return half;
}

EBasisExpr jt_character_e(const RootSystem& rs, const Partition& lam) {
  EBasisExpr out;
  out.reduction_convention = "e_0=1; e_r=0 for r<0 or r>" + std::to_string(rs.dim_natural) + "; e_r=e_{" +
                             std::to_string(rs.dim_natural) + "-r} for " + std::to_string(rs.rank) + "<r<=" +
                             std::to_string(rs.dim_natural);
  Matrix<EPoly> m = jt_matrix_e(rs, lam);
  if (m.rows() == 0) {
    out.poly = EPoly::constant(QLaurent(1), rs.rank);
    return out;
  }
  EPoly det = det_exact(m);
  if (rs.type == LieType::C) {
    out.poly = det;
    return out;
  }
  bool ok = true;
  out.poly = det.map_coefficients([&](const QLaurent& c) {
    QLaurent h = c;
    if (!halve(h)) ok = false;
    return h;
  });
  if (!ok) throw Error(Errc::HalvingFailed, "odd coefficient in the E-basis determinant");
  return out;
}

QLaurent expected_leading_coefficient(const RootSystem& rs, int k) {
  QLaurent s;
  for (int r = 0; r < k; ++r) s += QLaurent::q_pow(rs.c_n - 1 - 2 * r);
  return k % 2 ? s : -s;
}

EBasisExpr g_in_e_basis(const RootSystem& rs, int k) {
  const int n = rs.rank;
  if (k < 1 || k > n) throw Error(Errc::IndexOutOfRange, "g_k in the E-basis needs 1 <= k <= n");
  EBasisExpr out;
  QLaurent constant;
  if (k % 2 == 0) constant = rs.type == LieType::C ? -QLaurent::q_pow(-k) : QLaurent::q_pow(-k);
  EPoly g = EPoly::constant(constant, n);
  for (int r = 0; r < k; ++r) {
    QLaurent coeff = QLaurent::q_pow(rs.c_n - 1 - 2 * r);
    if (r % 2) coeff = -coeff;
    if (rs.type == LieType::D && r == n - 1) {
      // chi(lambda) + chi(lambda bar) is the n-th exterior power.
      g += coeff * EPoly::symbol(n - 1, n);
      continue;
    }
    Weight w = hook_weight(rs, k, r).weight;
    Partition p;
    for (int i = 0; i < n; ++i)
      if (w.doubled(i) != 0) p.push_back(w.doubled(i) / 2);
    EBasisExpr jt = jt_character_e(rs, p);
    if (out.reduction_convention.empty()) out.reduction_convention = jt.reduction_convention;
    g += coeff * jt.poly;
  }
  out.poly = g;
  return out;
}

QLaurent TriangularStep::q_den() const {
  QLaurent d(1);
  for (const auto& f : q_den_factors) d *= f;
  return d;
}

namespace {

EPoly::Monomial unit_monomial(int i, int n) {
  EPoly::Monomial m(n, 0);
  m[i] = 1;
  return m;
}

bool divides_all(const EPoly& p, const QLaurent& f) {
  try {
    for (const auto& [m, c] : p.terms()) (void)ql_div_exact(c, f);
  } catch (const Error& e) {
    if (e.code() == Errc::NotDivisible) return false;
    throw;
  }
  return true;
}

}  // namespace

bool round_trip_holds(const RootSystem& rs, const TriangularStep& step) {
  const int n = rs.rank;
  std::vector<EPoly> images(n, EPoly(n));
  for (int j = 1; j < step.k; ++j) images[j - 1] = g_in_e_basis(rs, j).poly;
  const QLaurent den = step.q_den();
  EPoly lhs = (den * step.s) * EPoly::symbol(step.k - 1, n);
  EPoly rhs = den * g_in_e_basis(rs, step.k).poly + step.s * step.q_num.substitute(images);
  return lhs == rhs;
}

TriangularSolution triangular_solve(const RootSystem& rs) {
  const int n = rs.rank;
  TriangularSolution sol;
  sol.type = rs.type;
  sol.rank = n;
  // E_j = nums[j] / dens[j] as polynomials in the G-symbols.
  std::vector<EPoly> nums;
  std::vector<std::vector<QLaurent>> den_factors;
  std::vector<QLaurent> dens;

  for (int k = 1; k <= n; ++k) {
    EPoly g = g_in_e_basis(rs, k).poly;
    if (!g.depends_only_on_first(k))
      throw Error(Errc::CertificateFailed, "g_" + std::to_string(k) + " involves E_j with j > k");
    const QLaurent s = g.coeff(unit_monomial(k - 1, n));
    if (s.is_zero())
      throw Error(Errc::SingularLeadingCoefficient, "E_" + std::to_string(k) + " has coefficient 0 in g_" +
                                                        std::to_string(k));
    EPoly rest = g - s * EPoly::symbol(k - 1, n);
    if (rest.degree_in(k - 1) > 0)
      throw Error(Errc::CertificateFailed, "g_" + std::to_string(k) + " is not linear in E_" + std::to_string(k));

    std::vector<int> max_deg(k - 1);
    for (int j = 0; j < k - 1; ++j) max_deg[j] = std::max(0, rest.degree_in(j));

    std::map<std::pair<int, int>, EPoly> num_pow;
    std::map<std::pair<int, int>, QLaurent> den_pow;
    auto np = [&](int j, int e) -> const EPoly& {
      auto it = num_pow.find({j, e});
      if (it == num_pow.end()) it = num_pow.emplace(std::make_pair(j, e), nums[j].pow(e)).first;
      return it->second;
    };
    auto dp = [&](int j, int e) -> const QLaurent& {
      auto it = den_pow.find({j, e});
      if (it == den_pow.end()) it = den_pow.emplace(std::make_pair(j, e), dens[j].pow(e)).first;
      return it->second;
    };

    EPoly rnum(n);
    for (const auto& [m, c] : rest.terms()) {
      QLaurent scale = c;
      EPoly term = EPoly::constant(QLaurent(1), n);
      for (int j = 0; j < k - 1; ++j) {
        if (m[j] > 0) term = term * np(j, m[j]);
        scale *= dp(j, max_deg[j] - m[j]);
      }
      rnum += scale * term;
    }

    TriangularStep step;
    step.k = k;
    step.s = s;
    step.q_num = -rnum;
    step.q_den_factors.push_back(s);
    for (int j = 0; j < k - 1; ++j)
      for (int e = 0; e < max_deg[j]; ++e)
        step.q_den_factors.insert(step.q_den_factors.end(), den_factors[j].begin(), den_factors[j].end());
    // Cancel whole denominator factors that divide the numerator.
    for (std::size_t i = 0; i < step.q_den_factors.size();) {
      const QLaurent f = step.q_den_factors[i];
      if (!f.is_constant() && !step.q_num.is_zero() && divides_all(step.q_num, f)) {
        step.q_num = step.q_num.map_coefficients([&](const QLaurent& c) { return ql_div_exact(c, f); });
        step.q_den_factors.erase(step.q_den_factors.begin() + static_cast<long>(i));
      } else {
        ++i;
      }
    }
    if (step.q_num.is_zero()) step.q_den_factors.clear();

    if (!round_trip_holds(rs, step))
      throw Error(Errc::CertificateFailed, "round trip fails for E_" + std::to_string(k));

    // E_k = (q_den G_k + s q_num) / (s q_den)
    const QLaurent qd = step.q_den();
    nums.push_back(qd * EPoly::symbol(k - 1, n) + s * step.q_num);
    std::vector<QLaurent> f = step.q_den_factors;
    f.push_back(s);
    den_factors.push_back(f);
    dens.push_back(s * qd);
    sol.steps.push_back(std::move(step));
  }
  return sol;
}

Matrix<EPoly> jacobian(const RootSystem& rs) {
  const int n = rs.rank;
  Matrix<EPoly> jac(n, n);
  for (int i = 0; i < n; ++i) {
    EPoly g = g_in_e_basis(rs, i + 1).poly;
    for (int j = 0; j < n; ++j) jac(i, j) = g.partial(j);
  }
  return jac;
}

int required_solve_range(const RootSystem& rs) {
  switch (rs.type) {
    case LieType::B: return rs.rank - 1;
    case LieType::C: return rs.rank;
    case LieType::D: return rs.rank - 2;
  }
  return 0;
}

bool GenerationCertificate::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& c) { return c.passed; });
}

std::vector<std::string> e_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("E" + std::to_string(i));
  return out;
}

std::vector<std::string> g_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("G" + std::to_string(i));
  return out;
}

namespace {

GAElem evaluate_in_characters(const EPoly& p, const std::vector<GAElem>& values, int rank) {
  const GAElem one = GAElem::constant(QLaurent(1), rank);
  return p.evaluate<GAElem>(values, one, [&](const QLaurent& c) { return GAElem::constant(c, rank); });
}

}  // namespace

GenerationCertificate certify(const RootSystem& rs) {
  const int n = rs.rank;
  GenerationCertificate cert;
  cert.type = rs.type;
  cert.rank = n;
  const int need = required_solve_range(rs);

  auto record = [&](std::string name, auto&& body) {
    CertificateCheck c;
    c.name = std::move(name);
    try {
      c.passed = body(c.detail);
    } catch (const Error& e) {
      c.passed = false;
      c.detail = e.what();
    }
    cert.checks.push_back(std::move(c));
  };

  std::vector<GAElem> e_chars;
  for (int r = 1; r <= n; ++r) e_chars.push_back(ext_power_char(rs, r));

  TriangularSolution sol;
  record("triangular_solve", [&](std::string& detail) {
    sol = triangular_solve(rs);
    detail = "solved and round-tripped k = 1.." + std::to_string(sol.steps.size()) + ", required 1.." +
             std::to_string(need);
    return static_cast<int>(sol.steps.size()) >= need;
  });
  cert.solved_range = static_cast<int>(sol.steps.size());

  for (const auto& step : sol.steps) {
    record("leading_coefficient_" + std::to_string(step.k), [&](std::string& detail) {
      detail = "s_k = " + to_string(step.s);
      return step.s == expected_leading_coefficient(rs, step.k);
    });
  }
  if (!sol.steps.empty()) {
    record("c1_and_q1", [&](std::string& detail) {
      const auto& st = sol.steps.front();
      detail = "c_1 = q^" + std::to_string(1 - rs.c_n) + ", Q_1 = 0";
      return st.s * QLaurent::q_pow(1 - rs.c_n) == QLaurent(1) && st.q_num.is_zero();
    });
  }

  record("jacobian", [&](std::string& detail) {
    EPoly det = det_exact(jacobian(rs));
    QLaurent prod(1);
    for (int k = 1; k <= n; ++k) prod *= expected_leading_coefficient(rs, k);
    detail = "det = " + to_string(det, e_names(n));
    return det == EPoly::constant(prod, n) && !prod.is_zero();
  });

  for (int k = 1; k <= n; ++k) {
    record("e_basis_character_" + std::to_string(k), [&](std::string&) {
      GAElem v = evaluate_in_characters(g_in_e_basis(rs, k).poly, e_chars, n);
      return v == ch_g_via_hooks(rs, k).body && v == ch_g_via_antisym(rs, k).body;
    });
  }

  if (!sol.steps.empty()) {
    std::vector<GAElem> g_chars;
    for (int k = 1; k <= n; ++k) g_chars.push_back(ch_g_via_antisym(rs, k).body);
    for (const auto& step : sol.steps) {
      if (step.k > need) break;
      record("solution_in_character_ring_" + std::to_string(step.k), [&](std::string&) {
        const QLaurent qd = step.q_den();
        GAElem lhs = e_chars[step.k - 1] * (step.s * qd);
        GAElem rhs = g_chars[step.k - 1] * qd + evaluate_in_characters(step.q_num, g_chars, n) * step.s;
        return lhs == rhs;
      });
    }
  }

  for (int r = 1; r <= need; ++r) {
    record("fundamental_character_" + std::to_string(r), [&](std::string& detail) {
      GAElem chi = weyl_character(rs, fundamental_weight(rs, r));
      GAElem expr = ext_power_char(rs, r);
      if (rs.type == LieType::C && r >= 2) {
        expr -= ext_power_char(rs, r - 2);
        detail = "chi(w_" + std::to_string(r) + ") = e_" + std::to_string(r) + " - e_" + std::to_string(r - 2);
      } else {
        detail = "chi(w_" + std::to_string(r) + ") = e_" + std::to_string(r);
      }
      return chi == expr;
    });
  }

  if (rs.type == LieType::D) {
    record("top_exterior_power_fold", [&](std::string& detail) {
      detail = "e_n = chi(2 w_{n-1}) + chi(2 w_n)";
      return ext_power_char(rs, n) == weyl_character(rs, 2 * fundamental_weight(rs, n - 1)) +
                                          weyl_character(rs, 2 * fundamental_weight(rs, n));
    });
  }

  auto extra = [&](int i) {
    Weight w = fundamental_weight(rs, i);
    cert.extra_generators.push_back({"chi(w_" + std::to_string(i) + ")", w, weyl_character(rs, w)});
  };
  if (rs.type == LieType::B) extra(n);
  if (rs.type == LieType::D) {
    extra(n - 1);
    extra(n);
  }
  for (const auto& g : cert.extra_generators) {
    record("extra_generator_" + g.name, [&](std::string& detail) {
      detail = "W-invariant spin character of dimension " +
               ga_eval(g.character, 1, std::vector<Rational>(n, Rational(1))).get_str();
      return !g.weight.is_integral() && !g.character.is_zero();
    });
  }
  return cert;
}

GenerationCertificate generation_certificate(const RootSystem& rs) {
  GenerationCertificate cert = certify(rs);
  for (const auto& c : cert.checks)
    if (!c.passed) throw Error(Errc::CertificateFailed, c.name + (c.detail.empty() ? "" : ": " + c.detail));
  return cert;
}

}  // namespace qcasimir
