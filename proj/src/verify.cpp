#include "qcasimir/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "qcasimir/basis_change.hpp"
#include "qcasimir/casimir.hpp"
#include "qcasimir/characters.hpp"
#include "qcasimir/errors.hpp"
#include "qcasimir/matrix.hpp"
#include "qcasimir/weyl_group.hpp"

namespace qcasimir {

bool VerifyReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.passed; });
}

std::size_t VerifyReport::pass_count() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.passed; }));
}

const std::vector<std::pair<LieType, int>>& default_scope() {
  static const std::vector<std::pair<LieType, int>> scope = {
      {LieType::B, 2}, {LieType::B, 3}, {LieType::B, 4}, {LieType::C, 3},
      {LieType::C, 4}, {LieType::D, 4}, {LieType::D, 5}};
  return scope;
}

namespace {

using Suite = std::function<void(const VerifyConfig&, std::vector<VerifyCase>&)>;

class Sampler {
 public:
  explicit Sampler(std::initializer_list<std::uint64_t> parts) {
    std::vector<std::uint32_t> words;
    for (auto p : parts) {
      words.push_back(static_cast<std::uint32_t>(p));
      words.push_back(static_cast<std::uint32_t>(p >> 32));
    }
    std::seed_seq seq(words.begin(), words.end());
    rng_.seed(seq);
  }

  int below(int m) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(m)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  // Distinct rationals in (1, 3): values of e^{eps_a/2}, so L_a lies in (1, 9).
  std::vector<Rational> half_point(int n) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < n) {
      int d = between(1, 4);
      Rational h(between(d + 1, 3 * d - 1), d);
      h.canonicalize();
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    }
    return out;
  }

  Rational s_value() {
    static const Rational choices[] = {Rational(2), Rational(3), Rational(5, 2)};
    return choices[below(3)];
  }

  QLaurent laurent(int max_terms) {
    std::vector<QLaurent::Term> terms;
    int count = between(0, max_terms);
    for (int i = 0; i < count; ++i) terms.emplace_back(4 * between(-3, 3), Rational(between(-3, 3)));
    return QLaurent::from_terms(terms);
  }

  Weight weight(int n, int bound) {
    std::vector<int> c(n);
    for (auto& x : c) x = between(-bound, bound);
    return Weight::from_ints(c);
  }

  GAElem element(int n, int terms) {
    GAElem x(n);
    for (int i = 0; i < terms; ++i) x.add_term(weight(n, 2), laurent(2) + QLaurent(1));
    return x;
  }

  Weight dominant_weight(const RootSystem& rs, int bound) {
    const int n = rs.rank;
    const bool spin = rs.type != LieType::C && below(3) == 0;
    std::vector<int> d(n);
    for (auto& x : d) x = spin ? 2 * between(0, bound - 1) + 1 : 2 * between(0, bound);
    std::sort(d.rbegin(), d.rend());
    if (rs.type == LieType::D && below(2)) d[n - 1] = -d[n - 1];
    return Weight::from_doubled(d);
  }

 private:
  std::mt19937_64 rng_;
};

std::uint64_t tag(const RootSystem& rs) { return static_cast<std::uint64_t>(to_char(rs.type)) * 16 + rs.rank; }

std::string sys_id(const RootSystem& rs) { return rs.name(); }

template <class Body>
void run_case(std::vector<VerifyCase>& out, std::string id, Body body) {
  VerifyCase c;
  c.id = std::move(id);
  try {
    c.passed = body(c.detail);
  } catch (const Error& e) {
    c.passed = false;
    c.detail = e.what();
  }
  out.push_back(std::move(c));
}

std::vector<RootSystem> systems(const VerifyConfig& cfg, std::initializer_list<LieType> types) {
  std::vector<RootSystem> out;
  auto admitted = [&](LieType t) { return std::find(types.begin(), types.end(), t) != types.end(); };
  if (cfg.systems.empty()) {
    for (auto [t, n] : default_scope())
      if (admitted(t)) out.push_back(build_root_system(t, n));
    return out;
  }
  for (auto [t, n] : cfg.systems) {
    if (!admitted(t))
      throw Error(Errc::InvalidArgument, "suite " + cfg.suite + " does not apply to type " + std::string(1, to_char(t)));
    out.push_back(build_root_system(t, n));
  }
  return out;
}

std::vector<RootSystem> all_systems(const VerifyConfig& cfg) { return systems(cfg, {LieType::B, LieType::C, LieType::D}); }

std::string terms_detail(const GAElem& x) { return std::to_string(x.size()) + " terms"; }

bool w_invariant(const RootSystem& rs, const GAElem& x) {
  for (const auto& w : enumerate_weyl(rs))
    if (!(act(w, x) == x)) return false;
  return true;
}

Weight bar(const Weight& w) {
  std::vector<int> d(w.rank());
  for (int i = 0; i < w.rank(); ++i) d[i] = w.doubled(i);
  d.back() = -d.back();
  return Weight::from_doubled(d);
}

// Criterion-level suites.

void suite_denominator(const VerifyConfig& cfg, std::vector<VerifyCase>& out) {
  for (const auto& rs : all_systems(cfg)) {
    run_case(out, sys_id(rs), [&](std::string& detail) {
      const GAElem& p = weyl_denominator(rs, DenominatorMode::Product);
      const GAElem& a = weyl_denominator(rs, DenominatorMode::Alternant);
      detail = "product form " + terms_detail(p) + ", alternant " + terms_detail(a) + ", |W| = " +
               std::to_string(enumerate_weyl(rs).size());
      return p == a;
    });
  }
}

void suite_numerator(const VerifyConfig& cfg, std::vector<VerifyCase>& out) {
  for (const auto& rs : all_systems(cfg)) {
    const GAElem& delta = weyl_denominator(rs, DenominatorMode::Alternant);
    for (int k = 0; k <= rs.rank + 2; ++k) {
      run_case(out, sys_id(rs) + "/k=" + std::to_string(k), [&](std::string& detail) {
        GAElem lhs = delta * ch_g_via_hooks(rs, k).body;
        GAElem rhs = antisymmetrize(h_element(rs, k), rs);
        rhs *= QLaurent::q_pow(rs.c_n - 1);
        if (rs.type == LieType::B) {
          GAElem d = delta;
          d *= QLaurent::q_pow(-k);
          rhs += d;
        }
        detail = "numerator " + terms_detail(lhs);
        return lhs == rhs;
      });
    }
  }
}

Suite suite_routes(LieType t) {
  return [t](const VerifyConfig& cfg, std::vector<VerifyCase>& out) {
    for (const auto& rs : systems(cfg, {t})) {
      for (int k = 0; k <= rs.rank + 2; ++k) {
        run_case(out, sys_id(rs) + "/k=" + std::to_string(k), [&](std::string& detail) {
          const GAElem a = ch_g_via_antisym(rs, k).body;
          const GAElem h = ch_g_via_hooks(rs, k).body;
          detail = terms_detail(h);
          if (rs.type == LieType::D && k >= 1 && k <= rs.rank) {
            int bars = 0;
            for (const auto& c : constituents(rs, k)) bars += c.bar;
            detail += ", " + std::to_string(bars) + " barred constituent" + (bars == 1 ? "" : "s");
          }
          return a == h;
        });
      }
    }
  };
}

void suite_low_order(const VerifyConfig& cfg, std::vector<VerifyCase>& out) {
  for (const auto& rs : all_systems(cfg)) {
    const int n = rs.rank;
    Weight two_rho = 2 * rs.rho;
    QLaurent qdim;
    GAElem natural(n);
    for (int a : rs.casimir_indices) {
      Weight e = natural_weight(rs, a);
      Rational x = pairing(two_rho, e);
      qdim += QLaurent::q_pow(static_cast<int>(x.get_num().get_si()));
      natural.add_term(e, QLaurent::q_pow(rs.c_n - 1));
    }
    run_case(out, sys_id(rs) + "/k=0", [&](std::string& detail) {
      GAElem expected = GAElem::constant(qdim, n);
      detail = to_string(qdim);
      return ch_g_via_hooks(rs, 0).body == expected && ch_g_via_antisym(rs, 0).body == expected;
    });
    run_case(out, sys_id(rs) + "/k=1", [&](std::string& detail) {
      detail = "q^" + std::to_string(rs.c_n - 1) + " times the natural character";
      return ch_g_via_hooks(rs, 1).body == natural && ch_g_via_antisym(rs, 1).body == natural;
    });
  }
}

// Draws points until the rational form is defined; returns the number of redraws.
template <class Eval>
int draw_point(Sampler& rng, int n, Rational& s, std::vector<Rational>& half, Rational& value, Eval eval) {
  for (int redraws = 0; redraws < 1000; ++redraws) {
    s = rng.s_value();
    half = rng.half_point(n);
    try {
      value = eval(s, half);
      return redraws;
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateEvaluation) throw;
    }
  }
  throw Error(Errc::DegenerateEvaluation, "no non-degenerate point found");
}

Rational hc_value(const CasimirImage& img, const Rational& s, const std::vector<Rational>& half) {
  Rational v = ga_eval(img.body, s, half);
  Rational f = 1 / pow(s, 4) - pow(s, 4);
  return v / pow(f, img.denominator_power);
}

void suite_oracle(const VerifyConfig& cfg, std::vector<VerifyCase>& out) {
  for (const auto& rs : all_systems(cfg)) {
    const int n = rs.rank;
    for (int k = 0; k <= n; ++k) {
      run_case(out, sys_id(rs) + "/G/k=" + std::to_string(k), [&](std::string& detail) {
        Sampler rng{cfg.seed, 5, tag(rs), static_cast<std::uint64_t>(k)};
        const GAElem body = ch_g_via_antisym(rs, k).body;
        int matches = 0, redraws = 0;
        for (int p = 0; p < cfg.points; ++p) {
          Rational s, v;
          std::vector<Rational> half;
          redraws += draw_point(rng, n, s, half, v,
                                [&](const Rational& s_, const std::vector<Rational>& h) { return g_rational_eval(rs, k, s_, h); });
          matches += v == ga_eval(body, s, half);
        }
        detail = std::to_string(matches) + "/" + std::to_string(cfg.points) + " exact matches, " +
                 std::to_string(redraws) + " degenerate redraws";
        return matches == cfg.points;
      });
    }
    for (int ell = 1; ell <= n; ++ell) {
      run_case(out, sys_id(rs) + "/C0/l=" + std::to_string(ell), [&](std::string& detail) {
        Sampler rng{cfg.seed, 6, tag(rs), static_cast<std::uint64_t>(ell)};
        const CasimirImage img = hc_image(rs, ell);
        int matches = 0, redraws = 0;
        for (int p = 0; p < cfg.points; ++p) {
          Rational s, v;
          std::vector<Rational> half;
          redraws += draw_point(rng, n, s, half, v, [&](const Rational& s_, const std::vector<Rational>& h) {
            return c0_rational_eval(rs, ell, s_, h);
          });
          matches += v == hc_value(img, s, half);
        }
        detail = std::to_string(matches) + "/" + std::to_string(cfg.points) + " exact matches, " +
                 std::to_string(redraws) + " degenerate redraws";
        return matches == cfg.points;
      });
    }
  }
}

void suite_hc(const VerifyConfig& cfg, std::vector<VerifyCase>& out) {
  for (const auto& rs : all_systems(cfg)) {
    for (int ell = 1; ell <= rs.rank; ++ell) {
      run_case(out, sys_id(rs) + "/l=" + std::to_string(ell), [&](std::string& detail) {
        const CasimirImage img = hc_image(rs, ell);
        const bool inv = w_invariant(rs, img.body);
        const bool grid = img.body.has_integral_support();
        detail = std::to_string(ell - img.denominator_power) + " of " + std::to_string(ell) +
                 " factors (q^-1 - q) divide exactly";
        detail += inv ? ", W-invariant" : ", not W-invariant";
        detail += grid ? ", integer grid" : ", off the integer grid";
        return img.is_laurent() && inv && grid;
      });
    }
  }
}

void suite_eigen(const VerifyConfig& cfg, std::vector<VerifyCase>& out) {
  for (const auto& rs : all_systems(cfg)) {
    Sampler rng{cfg.seed, 7, tag(rs)};
    std::vector<Weight> weights;
    while (static_cast<int>(weights.size()) < cfg.weights) {
      Weight w = rng.dominant_weight(rs, 3);
      if (std::find(weights.begin(), weights.end(), w) == weights.end()) weights.push_back(w);
    }
    std::sort(weights.begin(), weights.end());
    for (int ell = 1; ell <= rs.rank; ++ell) {
      run_case(out, sys_id(rs) + "/l=" + std::to_string(ell), [&](std::string& detail) {
        int matches = 0, total = 0;
        std::string first_bad;
        for (const auto& lam : weights)
          for (int s : {2, 3}) {
            ++total;
            bool ok = eigenvalue_direct(rs, lam, ell, s) == eigenvalue_via_hc(rs, lam, ell, s);
            matches += ok;
            if (!ok && first_bad.empty()) first_bad = to_string(lam) + " at s = " + std::to_string(s);
          }
        detail = std::to_string(matches) + "/" + std::to_string(total) + " exact matches over " +
                 std::to_string(weights.size()) + " weights";
        if (!first_bad.empty()) detail += ", first mismatch " + first_bad;
        return matches == total;
      });
    }
  }
}

void partitions(int max_parts, int max_size, int max_part, Partition& cur, std::vector<Partition>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_parts) return;
  int used = 0;
  for (int x : cur) used += x;
  for (int p = std::min(max_part, max_size - used); p >= 1; --p) {
    cur.push_back(p);
    partitions(max_parts, max_size, p, cur, out);
    cur.pop_back();
  }
}

std::string partition_id(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

bool jt_case(const RootSystem& rs, const Partition& p, std::string& detail) {
  GAElem jt = jt_character_ga(rs, p);
  Weight w = partition_weight(rs, p);
  GAElem chi = weyl_character(rs, w);
  if (jt == chi) {
    detail = "halving exact, " + terms_detail(chi);
    return true;
  }
  detail = "determinant differs from chi";
  if (rs.type == LieType::D && static_cast<int>(p.size()) == rs.rank && jt == chi + weyl_character(rs, bar(w)))
    detail = "determinant equals chi(lambda) + chi(lambda bar)";
  return false;
}

void suite_jt(const VerifyConfig& cfg, std::vector<VerifyCase>& out) {
  for (const auto& rs : all_systems(cfg)) {
    std::vector<Partition> parts;
    Partition cur;
    partitions(rs.rank, 5, 5, cur, parts);
    for (const auto& p : parts)
      run_case(out, sys_id(rs) + "/" + partition_id(p), [&](std::string& detail) { return jt_case(rs, p, detail); });
    for (int r = 0; r <= rs.rank - 1; ++r)
      for (int arm = 1; arm <= 3; ++arm) {
        Partition hook(1, arm);
        hook.insert(hook.end(), r, 1);
        run_case(out, sys_id(rs) + "/hook" + partition_id(hook), [&](std::string& detail) {
          Matrix<EPoly> m = hook_matrix_e(rs, arm + r, r);
          bool shape = true;
          for (std::size_t i = 1; i < m.rows(); ++i)
            for (std::size_t j = 0; j + 1 < i; ++j) shape = shape && m(i, j).is_zero();
          for (std::size_t i = 1; i < m.rows(); ++i)
            shape = shape && m(i, i - 1) == EPoly::constant(QLaurent(1), rs.rank);
          bool same = det_exact(m) == jt_character_e(rs, hook).poly;
          bool ok = jt_case(rs, hook, detail);
          if (!shape) detail += ", hook matrix not unit upper-Hessenberg";
          if (!same) detail += ", hook-form determinant differs";
          return ok && shape && same;
        });
      }
  }
}

void suite_basis(const VerifyConfig& cfg, std::vector<VerifyCase>& out) {
  for (const auto& rs : all_systems(cfg)) {
    const int n = rs.rank;
    const int need = required_solve_range(rs);
    TriangularSolution sol;
    run_case(out, sys_id(rs) + "/solve", [&](std::string& detail) {
      sol = triangular_solve(rs);
      detail = "k = 1.." + std::to_string(sol.steps.size()) + " solved, required through " + std::to_string(need);
      return static_cast<int>(sol.steps.size()) >= need;
    });
    for (const auto& st : sol.steps) {
      run_case(out, sys_id(rs) + "/k=" + std::to_string(st.k), [&](std::string& detail) {
        detail = "1/c_k = " + to_string(st.s);
        return !st.s.is_zero() && st.s == expected_leading_coefficient(rs, st.k) && round_trip_holds(rs, st);
      });
    }
    run_case(out, sys_id(rs) + "/c1", [&](std::string& detail) {
      if (sol.steps.empty()) return false;
      const auto& st = sol.steps.front();
      detail = "c_1 = q^" + std::to_string(1 - rs.c_n);
      return st.s * QLaurent::q_pow(1 - rs.c_n) == QLaurent(1) && st.q_num.is_zero();
    });
    run_case(out, sys_id(rs) + "/jacobian", [&](std::string& detail) {
      EPoly det = det_exact(jacobian(rs));
      QLaurent prod(1);
      for (int k = 1; k <= n; ++k) prod *= expected_leading_coefficient(rs, k);
      detail = "det = " + to_string(det, e_names(n));
      return !prod.is_zero() && det == EPoly::constant(prod, n);
    });
    if (rs.type == LieType::D) {
      run_case(out, sys_id(rs) + "/fold", [&](std::string& detail) {
        std::vector<GAElem> e;
        for (int r = 1; r <= n; ++r) e.push_back(ext_power_char(rs, r));
        GAElem g = g_in_e_basis(rs, n).poly.evaluate<GAElem>(
            e, GAElem::constant(QLaurent(1), n), [&](const QLaurent& c) { return GAElem::constant(c, n); });
        GAElem pair = weyl_character(rs, 2 * fundamental_weight(rs, n - 1)) +
                      weyl_character(rs, 2 * fundamental_weight(rs, n));
        detail = "e_n = chi(2w_{n-1}) + chi(2w_n) and g_n(e) = Ch G_{n,n}";
        return pair == e[n - 1] && g == ch_g_via_hooks(rs, n).body;
      });
    }
  }
}

void suite_certificate(const VerifyConfig& cfg, std::vector<VerifyCase>& out) {
  for (const auto& rs : all_systems(cfg)) {
    GenerationCertificate cert = certify(rs);
    for (const auto& c : cert.checks) out.push_back({sys_id(rs) + "/" + c.name, c.passed, c.detail});
    run_case(out, sys_id(rs) + "/extra_generators", [&](std::string& detail) {
      std::vector<std::string> expected;
      if (rs.type == LieType::B) expected = {"chi(w_" + std::to_string(rs.rank) + ")"};
      if (rs.type == LieType::D)
        expected = {"chi(w_" + std::to_string(rs.rank - 1) + ")", "chi(w_" + std::to_string(rs.rank) + ")"};
      std::vector<std::string> got;
      for (const auto& g : cert.extra_generators) got.push_back(g.name);
      detail = got.empty() ? "none" : "";
      for (std::size_t i = 0; i < got.size(); ++i) detail += (i ? ", " : "") + got[i];
      return got == expected;
    });
  }
}

void suite_stability(const VerifyConfig& cfg, std::vector<VerifyCase>& out) {
  std::set<LieType> types;
  if (cfg.systems.empty())
    types = {LieType::B, LieType::C, LieType::D};
  else
    for (auto [t, n] : cfg.systems) types.insert(t);
  for (LieType t : types) {
    const int min_rank = t == LieType::B ? 2 : t == LieType::C ? 3 : 4;
    for (int k = 1; k <= 4; ++k) {
      std::vector<int> ranks;
      for (int n = min_rank; n <= cfg.max_rank; ++n)
        if (t == LieType::D ? n > k : n >= k) ranks.push_back(n);
      if (ranks.empty()) continue;
      run_case(out, std::string(1, to_char(t)) + "/k=" + std::to_string(k), [&](std::string& detail) {
        auto ref = constituents(build_root_system(t, ranks.front()), k);
        bool same = true;
        detail = "ranks";
        for (int n : ranks) {
          detail += " " + std::to_string(n);
          same = same && constituents(build_root_system(t, n), k) == ref;
        }
        detail += ":";
        for (const auto& c : ref) detail += " " + to_string(c);
        return same;
      });
    }
  }
}

void suite_properties(const VerifyConfig& cfg, std::vector<VerifyCase>& out) {
  for (const auto& rs : all_systems(cfg)) {
    const int n = rs.rank;
    if (n <= 4) {
      run_case(out, sys_id(rs) + "/alternating", [&](std::string& detail) {
        Sampler rng{cfg.seed, 12, tag(rs), 1};
        bool ok = true;
        for (int trial = 0; trial < 3; ++trial) {
          GAElem ax = antisymmetrize(rng.element(n, 3), rs);
          for (const auto& w : enumerate_weyl(rs)) {
            GAElem expected = ax;
            expected *= QLaurent(sgn(w));
            ok = ok && act(w, ax) == expected;
          }
        }
        detail = "3 random elements, all " + std::to_string(enumerate_weyl(rs).size()) + " group elements";
        return ok;
      });
      run_case(out, sys_id(rs) + "/cosets", [&](std::string& detail) {
        auto reps = coset_representatives(rs);
        auto stab = stabilizer_of_eps1(rs);
        std::set<SignedPerm> seen;
        for (const auto& r : reps)
          for (const auto& h : stab) seen.insert(compose(r, h));
        detail = std::to_string(reps.size()) + " x " + std::to_string(stab.size()) + " -> " + std::to_string(seen.size());
        return reps.size() * stab.size() == enumerate_weyl(rs).size() && seen.size() == enumerate_weyl(rs).size();
      });
      run_case(out, sys_id(rs) + "/characters", [&](std::string& detail) {
        std::vector<Partition> parts;
        Partition cur;
        partitions(n, 2 * n, 2, cur, parts);
        std::vector<Weight> weights;
        for (const auto& p : parts) {
          Weight w = partition_weight(rs, p);
          weights.push_back(w);
          if (rs.type == LieType::D && static_cast<int>(p.size()) == n) weights.push_back(bar(w));
        }
        bool ok = true;
        for (const auto& w : weights) {
          GAElem chi = weyl_character(rs, w);
          Rational dim = 1;
          for (const auto& alpha : rs.positive_roots) dim *= pairing(w + rs.rho, alpha) / pairing(rs.rho, alpha);
          ok = ok && w_invariant(rs, chi) && ga_eval(chi, 1, std::vector<Rational>(n, Rational(1))) == dim;
        }
        detail = std::to_string(weights.size()) + " weights with coordinates <= 2: W-invariance and dimension";
        return ok;
      });
    }
    run_case(out, sys_id(rs) + "/vanishing", [&](std::string& detail) {
      Sampler rng{cfg.seed, 12, tag(rs), 2};
      int zero = 0;
      for (int i = 0; i < cfg.degenerate_samples; ++i) {
        const Weight& alpha = rs.positive_roots[rng.below(static_cast<int>(rs.positive_roots.size()))];
        Weight mu = rng.weight(n, 3);
        Weight lam = mu + act(reflection(alpha), mu);
        zero += antisymmetrize(GAElem::monomial(lam), rs).is_zero() && pairing(lam, alpha) == 0;
      }
      detail = std::to_string(zero) + "/" + std::to_string(cfg.degenerate_samples) + " alternants vanish";
      return zero == cfg.degenerate_samples;
    });
    run_case(out, sys_id(rs) + "/evaluation", [&](std::string& detail) {
      Sampler rng{cfg.seed, 12, tag(rs), 3};
      bool ok = true;
      for (int i = 0; i < 10; ++i) {
        GAElem x = rng.element(n, 4), y = rng.element(n, 4);
        Rational s = rng.s_value();
        auto half = rng.half_point(n);
        ok = ok && ga_eval(x * y, s, half) == ga_eval(x, s, half) * ga_eval(y, s, half);
        ok = ok && ga_eval(x + y, s, half) == ga_eval(x, s, half) + ga_eval(y, s, half);
        QLaurent a = rng.laurent(4), b = rng.laurent(4);
        ok = ok && ql_eval(a * b, s) == ql_eval(a, s) * ql_eval(b, s) && ql_eval(a + b, s) == ql_eval(a, s) + ql_eval(b, s);
      }
      detail = "10 random pairs in the group algebra and in Z[q^(1/4), q^(-1/4)]";
      return ok;
    });
    run_case(out, sys_id(rs) + "/unit_product", [&](std::string& detail) {
      GAElem lhs = GAElem::constant(QLaurent::q_pow(2 * n), n), rhs = GAElem::constant(QLaurent(1), n);
      for (int a : rs.casimir_indices) {
        if (a == 0) continue;
        Weight e = natural_weight(rs, a);
        lhs = lhs * (GAElem::constant(QLaurent(1), n) - GAElem::monomial(e, QLaurent::q_pow(-1)));
        rhs = rhs * (GAElem::constant(QLaurent(1), n) - GAElem::monomial(e, QLaurent::q_pow(1)));
      }
      detail = "q^2n prod (1 - q^-1 L_b) = prod (1 - q L_b)";
      return lhs == rhs;
    });
  }
  run_case(out, "determinants", [&](std::string& detail) {
    Sampler rng{cfg.seed, 12, 0, 4};
    bool ok = true;
    int count = 0;
    for (int size = 1; size <= 5; ++size)
      for (int trial = 0; trial < 4; ++trial, ++count) {
        Matrix<QLaurent> m(size, size);
        for (int i = 0; i < size; ++i)
          for (int j = 0; j < size; ++j) m(i, j) = rng.laurent(3);
        ok = ok && det_cofactor(m) == det_bareiss(m);
      }
    for (auto [t, n, p] : {std::tuple{LieType::B, 3, Partition{2, 2, 1}}, std::tuple{LieType::C, 3, Partition{3, 1}},
                           std::tuple{LieType::D, 4, Partition{2, 2}}}) {
      RootSystem rs = build_root_system(t, n);
      Matrix<GAElem> g = jt_matrix_ga(rs, p);
      Matrix<EPoly> e = jt_matrix_e(rs, p);
      ok = ok && det_cofactor(g) == det_bareiss(g) && det_cofactor(e) == det_bareiss(e);
      ++count;
    }
    detail = std::to_string(count) + " matrices: cofactor expansion = fraction-free elimination";
    return ok;
  });
}

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites = {
      {"denominator", suite_denominator},
      {"numerator", suite_numerator},
      {"thm44", suite_routes(LieType::B)},
      {"thm45", suite_routes(LieType::C)},
      {"thm46", suite_routes(LieType::D)},
      {"low_order", suite_low_order},
      {"oracle", suite_oracle},
      {"hc", suite_hc},
      {"eigen", suite_eigen},
      {"jt", suite_jt},
      {"basis", suite_basis},
      {"certificate", suite_certificate},
      {"stability", suite_stability},
      {"properties", suite_properties},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"all"};
    for (const auto& [name, s] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

VerifyReport run_suite(const VerifyConfig& cfg) {
  if (!is_suite(cfg.suite)) throw Error(Errc::InvalidArgument, "unknown suite " + cfg.suite);
  if (cfg.points < 1 || cfg.weights < 1 || cfg.degenerate_samples < 1)
    throw Error(Errc::InvalidArgument, "sample counts must be positive");
  VerifyReport report;
  report.suite = cfg.suite;
  report.seed = cfg.seed;
  for (const auto& [name, suite] : registry()) {
    if (cfg.suite != "all" && cfg.suite != name) continue;
    std::vector<VerifyCase> cases;
    VerifyConfig sub = cfg;
    sub.suite = name;
    if (cfg.suite == "all" && name.starts_with("thm")) {
      // Keep only the systems of the matching type.
      LieType t = name == "thm44" ? LieType::B : name == "thm45" ? LieType::C : LieType::D;
      std::erase_if(sub.systems, [&](const auto& sys) { return sys.first != t; });
      if (sub.systems.empty() && !cfg.systems.empty()) continue;
    }
    suite(sub, cases);
    for (auto& c : cases) {
      if (cfg.suite == "all") c.id = name + "/" + c.id;
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace qcasimir
