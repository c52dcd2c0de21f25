#include "qcasimir/serialize.hpp"

#include "qcasimir/errors.hpp"

namespace qcasimir {

namespace {

std::string type_name(LieType t) { return std::string(1, to_char(t)); }

template <class F>
auto parsing(F f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace

Json to_json(const QLaurent& a) {
  Json out = Json::array();
  for (const auto& [e, c] : a.terms()) out.push_back({{"e", e}, {"c", to_fraction_string(c)}});
  return out;
}

Json to_json(const EPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"exps", m}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const Weight& w) {
  Json out = Json::array();
  for (const auto& c : w.coords()) out.push_back(to_fraction_string(c));
  return out;
}

Json to_json(const GAElem& x) {
  Json out = Json::array();
  for (const auto& [mu, c] : x.terms()) {
    std::vector<int> d(mu.rank());
    for (int i = 0; i < mu.rank(); ++i) d[i] = mu.doubled(i);
    out.push_back({{"weight", d}, {"coeff", to_json(c)}});
  }
  return out;
}

Json to_json(const RootSystem& rs) {
  Json out;
  out["type"] = type_name(rs.type);
  out["rank"] = rs.rank;
  out["rho"] = to_json(rs.rho);
  out["c_n"] = rs.c_n;
  out["dim_natural"] = rs.dim_natural;
  Json simple = Json::array(), positive = Json::array(), fundamental = Json::array();
  for (const auto& a : rs.simple_roots) simple.push_back(to_json(a));
  for (const auto& a : rs.positive_roots) positive.push_back(to_json(a));
  for (const auto& w : rs.fundamental_weights) fundamental.push_back(to_json(w));
  out["simple_roots"] = simple;
  out["positive_roots"] = positive;
  out["fundamental_weights"] = fundamental;
  return out;
}

Json to_json(const CasimirImage& img) {
  Json out;
  out["type"] = type_name(img.type);
  out["rank"] = img.rank;
  out["k_or_ell"] = img.index;
  out["provenance"] = provenance_name(img.provenance);
  out["body"] = to_json(img.body);
  out["denominator_power"] = img.denominator_power;
  return out;
}

Json to_json(const Constituent& c) {
  Json out;
  out["constant"] = c.constant;
  out["q_power"] = c.q_power;
  out["partition"] = c.partition;
  out["bar"] = c.bar;
  out["multiplicity"] = c.multiplicity;
  return out;
}

Json to_json(const TriangularSolution& sol) {
  Json out;
  out["type"] = type_name(sol.type);
  out["rank"] = sol.rank;
  Json steps = Json::array();
  for (const auto& st : sol.steps) {
    Json den = Json::array();
    for (const auto& f : st.q_den_factors) den.push_back(to_json(f));
    steps.push_back({{"k", st.k}, {"inverse_c", to_json(st.s)}, {"q_num", to_json(st.q_num)}, {"q_den_factors", den}});
  }
  out["steps"] = steps;
  return out;
}

Json to_json(const GenerationCertificate& cert) {
  Json out;
  out["type"] = type_name(cert.type);
  out["rank"] = cert.rank;
  out["solved_range"] = cert.solved_range;
  Json extra = Json::array();
  for (const auto& g : cert.extra_generators) extra.push_back({{"name", g.name}, {"weight", to_json(g.weight)}});
  out["extra_generators"] = extra;
  Json checks = Json::array();
  for (const auto& c : cert.checks) checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}});
  out["checks"] = checks;
  return out;
}

Json to_json(const VerifyReport& report) {
  Json out;
  out["suite"] = report.suite;
  Json cases = Json::array();
  for (const auto& c : report.cases)
    cases.push_back({{"id", c.id}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  out["cases"] = cases;
  out["seed"] = report.seed;
  return out;
}

QLaurent qlaurent_from_json(const Json& j) {
  return parsing([&] {
    if (!j.is_array()) throw Error(Errc::ParseError, "Laurent polynomial must be an array");
    std::vector<QLaurent::Term> terms;
    for (const auto& t : j) terms.emplace_back(t.at("e").get<int>(), parse_rational(t.at("c").get<std::string>()));
    return QLaurent::from_terms(std::move(terms));
  });
}

EPoly epoly_from_json(const Json& j, int num_symbols) {
  return parsing([&] {
    if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be an array");
    EPoly out(num_symbols);
    for (const auto& t : j) {
      auto exps = t.at("exps").get<EPoly::Monomial>();
      if (static_cast<int>(exps.size()) != num_symbols) throw Error(Errc::ParseError, "exponent vector length");
      out += EPoly::monomial(qlaurent_from_json(t.at("coeff")), exps);
    }
    return out;
  });
}

Weight weight_from_json(const Json& j) {
  return parsing([&] {
    if (!j.is_array()) throw Error(Errc::ParseError, "weight must be an array");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(parse_rational(x.get<std::string>()));
    return Weight::from_rationals(c);
  });
}

GAElem gaelem_from_json(const Json& j, int rank) {
  return parsing([&] {
    if (!j.is_array()) throw Error(Errc::ParseError, "group algebra element must be an array");
    GAElem out(rank);
    for (const auto& t : j) {
      auto d = t.at("weight").get<std::vector<int>>();
      if (static_cast<int>(d.size()) != rank) throw Error(Errc::ParseError, "weight length");
      out.add_term(Weight::from_doubled(d), qlaurent_from_json(t.at("coeff")));
    }
    return out;
  });
}

}  // namespace qcasimir
