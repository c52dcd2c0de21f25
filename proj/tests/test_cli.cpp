#include <sstream>

#include "doctest.h"
#include "qcasimir/casimir.hpp"
#include "qcasimir/characters.hpp"
#include "qcasimir/cli.hpp"
#include "qcasimir/render.hpp"
#include "qcasimir/serialize.hpp"

using namespace qcasimir;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Run& r) {
  REQUIRE(r.code != cli::kUsage);
  return Json::parse(r.out);
}

bool all_pass(const Json& report) {
  for (const auto& c : report["cases"])
    if (c["status"] != "pass") return false;
  return true;
}

}  // namespace

TEST_CASE("roots") {
  auto r = run({"roots", "--type", "B", "--rank", "2"});
  CHECK(r.code == 0);
  Json j = json_of(r);
  CHECK(j["rho"] == Json::array({"3/2", "1/2"}));
  CHECK(j["c_n"] == 4);
  CHECK(j["positive_roots"].size() == 4);

  auto bad = run({"roots", "--type", "D", "--rank", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("RankTooSmall") != std::string::npos);

  auto tex = run({"roots", "--type", "C", "--rank", "3", "--format", "latex"});
  CHECK(tex.code == 0);
  CHECK(tex.out.find("\\begin{tabular}") != std::string::npos);
  CHECK(tex.out.find("\\end{tabular}") != std::string::npos);
  CHECK(tex.out.find("9 & $") != std::string::npos);

  CHECK(run({"roots", "--type", "C", "--rank", "3", "--format", "text"}).out.find("C3") == 0);
}

TEST_CASE("characters") {
  auto nat = json_of(run({"char", "--type", "B", "--rank", "2", "--lambda", "1,0"}));
  CHECK(nat["character"].size() == 5);
  auto c3 = json_of(run({"char", "--type", "C", "--rank", "3", "--lambda", "1,0,0"}));
  CHECK(c3["character"].size() == 6);
  auto spin = json_of(run({"char", "--type", "B", "--rank", "2", "--lambda", "1/2,1/2"}));
  CHECK(spin["character"].size() == 4);
  CHECK(gaelem_from_json(spin["character"], 2) == weyl_character(build_root_system(LieType::B, 2),
                                                            Weight::from_doubled(std::vector<int>{1, 1})));
  auto trivial = json_of(run({"char", "--type", "D", "--rank", "4", "--lambda", "0,0,0,0"}));
  CHECK(trivial["character"].size() == 1);

  CHECK(run({"char", "--type", "B", "--rank", "2", "--lambda", "0,1"}).code == 2);
  CHECK(run({"char", "--type", "B", "--rank", "2", "--lambda", "1,0,0"}).code == 2);
  CHECK(run({"char", "--type", "B", "--rank", "2", "--lambda", "1/3,0"}).code == 2);
  CHECK(run({"char", "--type", "B", "--rank", "2", "--lambda", "x,0"}).code == 2);
  CHECK(run({"char", "--type", "B", "--rank", "2", "--lambda", "1,0", "--format", "latex"}).out.find("\\varepsilon") !=
        std::string::npos);
}

TEST_CASE("Casimir images") {
  auto hooks = json_of(run({"gnk", "--type", "B", "--rank", "2", "--k", "2", "--route", "hooks"}));
  auto anti = json_of(run({"gnk", "--type", "B", "--rank", "2", "--k", "2", "--route", "antisym"}));
  CHECK(hooks["body"] == anti["body"]);
  CHECK(hooks["k_or_ell"] == 2);
  CHECK(anti["provenance"] != hooks["provenance"]);
  auto g0 = json_of(run({"gnk", "--type", "B", "--rank", "2", "--k", "0"}));
  REQUIRE(g0["body"].size() == 1);
  CHECK(qlaurent_from_json(g0["body"][0]["coeff"]) ==
        QLaurent::q_pow(3) + QLaurent::q_pow(1) + 1 + QLaurent::q_pow(-1) + QLaurent::q_pow(-3));

  auto hc = json_of(run({"hc", "--type", "C", "--rank", "3", "--ell", "1"}));
  CHECK(hc.contains("denominator_power"));
  CHECK(hc["type"] == "C");

  auto eig = run({"eig", "--type", "B", "--rank", "2", "--lambda", "1,0", "--ell", "1"});
  CHECK(eig.code == 0);
  Json ej = Json::parse(eig.out);
  auto b2 = build_root_system(LieType::B, 2);
  CHECK(ej["direct"] == to_fraction_string(eigenvalue_direct(b2, Weight::unit(2, 0), 1, 2)));
  CHECK(ej["agree"] == true);
  CHECK(run({"eig", "--type", "B", "--rank", "2", "--lambda", "0,1", "--ell", "1"}).code == 2);

  auto hook = json_of(run({"hook", "--type", "D", "--rank", "4", "--k", "4"}));
  CHECK(!hook.empty());
  CHECK(run({"hook", "--type", "D", "--rank", "4", "--k", "0"}).code == 2);
}

TEST_CASE("change of basis") {
  auto r = run({"solve-basis", "--type", "C", "--rank", "3"});
  CHECK(r.code == 0);
  Json j = json_of(r);
  CHECK(j["solution"].size() == 3);
  CHECK(j["solution"][0]["q_num"].empty());
  CHECK(j["extra_generators"].empty());
  for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
  auto text = run({"solve-basis", "--type", "B", "--rank", "3", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("E1") != std::string::npos);
}

TEST_CASE("verification suites") {
  auto r = run({"verify", "--suite", "thm45", "--type", "C", "--rank", "3"});
  CHECK(r.code == 0);
  Json j = json_of(r);
  CHECK(j["suite"] == "thm45");
  CHECK(j["cases"].size() == 6);
  CHECK(all_pass(j));

  auto st = run({"verify", "--suite", "stability", "--max-rank", "5"});
  CHECK(st.code == 0);
  CHECK(all_pass(json_of(st)));

  auto oracle = run({"verify", "--suite", "oracle", "--points", "20", "--seed", "7", "--type", "B", "--rank", "2"});
  CHECK(oracle.code == 0);
  Json oj = json_of(oracle);
  CHECK(oj["seed"] == 7);
  CHECK(all_pass(oj));
  CHECK(oj["cases"][0]["detail"].get<std::string>().find("20/20") != std::string::npos);

  auto again = run({"verify", "--suite", "oracle", "--points", "20", "--seed", "7", "--type", "B", "--rank", "2"});
  CHECK(again.out == oracle.out);
  auto other = run({"verify", "--suite", "oracle", "--points", "20", "--seed", "8", "--type", "B", "--rank", "2"});
  CHECK(other.out != oracle.out);

  auto hc = run({"verify", "--suite", "hc", "--type", "B", "--rank", "2"});
  CHECK(hc.code == (all_pass(json_of(hc)) ? 0 : 1));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"roots", "--type", "B"}).code == 2);
  CHECK(run({"roots", "--type", "A", "--rank", "3"}).code == 2);
  CHECK(run({"roots", "--type", "B", "--rank", "2", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "thm44", "--type", "C", "--rank", "3"}).code == 2);
  CHECK(run({"verify", "--suite", "thm45", "--format", "latex", "--type", "C", "--rank", "3"}).code == 2);
  CHECK(run({"gnk", "--type", "B", "--rank", "2", "--k", "1", "--route", "magic"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("JSON round trips") {
  QLaurent a = QLaurent::monomial(Rational(-3, 7), -5) + QLaurent::q_pow(2);
  Json ja = to_json(a);
  CHECK(ja[0]["e"] == -5);
  CHECK(ja[0]["c"] == "-3/7");
  CHECK(qlaurent_from_json(ja) == a);
  CHECK(qlaurent_from_json(to_json(QLaurent())) == QLaurent());

  EPoly p = EPoly::symbol(0, 3) * EPoly::symbol(2, 3) * a - EPoly::constant(5, 3);
  Json jp = to_json(p);
  CHECK(jp[0].contains("exps"));
  CHECK(epoly_from_json(jp, 3) == p);

  Weight w = Weight::from_doubled(std::vector<int>{3, -1, 0});
  CHECK(to_json(w) == Json::array({"3/2", "-1/2", "0/1"}));
  CHECK(weight_from_json(to_json(w)) == w);

  auto b3 = build_root_system(LieType::B, 3);
  GAElem chi = weyl_character(b3, fundamental_weight(b3, 3)) * a;
  Json jc = to_json(chi);
  CHECK(jc[0]["weight"] == Json::array({-1, -1, -1}));
  CHECK(gaelem_from_json(jc, 3) == chi);

  CHECK_THROWS_AS(qlaurent_from_json(Json::parse(R"([{"e": 1}])")), Error);
  CHECK_THROWS_AS(qlaurent_from_json(Json::parse(R"([{"e": 1, "c": "1/0"}])")), Error);
  CHECK_THROWS_AS(weight_from_json(Json::parse(R"(["1/3"])")), Error);
  CHECK_THROWS_AS(gaelem_from_json(Json::parse(R"([{"weight": [1, 2], "coeff": []}])"), 3), Error);
}

TEST_CASE("LaTeX rendering") {
  CHECK(latex(Rational(3, 2)) == "\\tfrac{3}{2}");
  CHECK(latex(Rational(-4)) == "-4");
  CHECK(latex(QLaurent::q_pow(3) - 1) == "q^{3} - 1");
  CHECK(latex(QLaurent::monomial(1, 2)) == "q^{1/2}");
  CHECK(latex(QLaurent::q_pow(1)) == "q");
  CHECK(latex(Weight::from_doubled(std::vector<int>{2, -1})) == "\\varepsilon_{1} - \\tfrac{1}{2}\\varepsilon_{2}");
  CHECK(latex(GAElem::constant(1, 2)) == "1");
  CHECK(latex(EPoly::symbol(1, 2), {"E_1", "E_2"}) == "E_2");
}
