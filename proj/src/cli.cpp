#include "qcasimir/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "qcasimir/characters.hpp"
#include "qcasimir/errors.hpp"
#include "qcasimir/render.hpp"
#include "qcasimir/serialize.hpp"

namespace qcasimir::cli {

namespace {

struct RunConfig {
  std::string type;
  int rank = 0;
  int k = -1;
  int ell = -1;
  std::string lambda;
  std::string s = "2";
  std::string route = "hooks";
  std::string format = "json";
  std::string suite = "all";
  std::uint64_t seed = 1;
  int points = 20;
  int max_rank = 5;
};

enum class Format { Json, Latex, Text };

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "latex") return Format::Latex;
  if (f == "text") return Format::Text;
  throw Error(Errc::InvalidArgument, "unknown format " + f);
}

Weight parse_lambda(const std::string& text, int rank) {
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
  if (static_cast<int>(coords.size()) != rank)
    throw Error(Errc::LengthMismatch,
                "lambda has " + std::to_string(coords.size()) + " coordinates for rank " + std::to_string(rank));
  return Weight::from_rationals(coords);
}

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(Errc::InvalidArgument, what);
}

RootSystem system_of(const RunConfig& cfg) {
  require(!cfg.type.empty(), "--type is required");
  require(cfg.rank > 0, "--rank is required");
  return build_root_system(parse_lie_type(cfg.type), cfg.rank);
}

std::string image_text(const CasimirImage& img, const char* symbol) {
  std::string out = std::string(symbol) + "(" + std::string(1, to_char(img.type)) + std::to_string(img.rank) + ", " +
                    std::to_string(img.index) + ") = ";
  if (img.denominator_power > 0)
    out += "[" + to_string(img.body) + "] / (q^-1 - q)^" + std::to_string(img.denominator_power);
  else
    out += to_string(img.body);
  return out + "\n";
}

std::string image_latex(const CasimirImage& img, const char* symbol) {
  std::string out = std::string(symbol) + " = ";
  if (img.denominator_power > 0)
    out += "\\frac{" + latex(img.body) + "}{(q^{-1} - q)^{" + std::to_string(img.denominator_power) + "}}";
  else
    out += latex(img.body);
  return out + "\n";
}

int cmd_roots(const RunConfig& cfg, std::ostream& out) {
  RootSystem rs = system_of(cfg);
  switch (parse_format(cfg.format)) {
    case Format::Json: out << to_json(rs).dump(2) << "\n"; break;
    case Format::Latex: out << latex_roots(rs); break;
    case Format::Text: out << text_roots(rs); break;
  }
  return kSuccess;
}

int cmd_char(const RunConfig& cfg, std::ostream& out) {
  RootSystem rs = system_of(cfg);
  require(!cfg.lambda.empty(), "--lambda is required");
  Weight lam = parse_lambda(cfg.lambda, rs.rank);
  GAElem chi = weyl_character(rs, lam);
  Rational dim = ga_eval(chi, 1, std::vector<Rational>(rs.rank, Rational(1)));
  switch (parse_format(cfg.format)) {
    case Format::Json: {
      Json j;
      j["type"] = std::string(1, to_char(rs.type));
      j["rank"] = rs.rank;
      j["lambda"] = to_json(lam);
      j["dimension"] = dim.get_str();
      j["character"] = to_json(chi);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Latex: out << "\\chi(" << latex(lam) << ") = " << latex(chi) << "\n"; break;
    case Format::Text: out << "chi" << to_string(lam) << " = " << to_string(chi) << "\ndimension " << dim << "\n"; break;
  }
  return kSuccess;
}

int cmd_gnk(const RunConfig& cfg, std::ostream& out) {
  RootSystem rs = system_of(cfg);
  require(cfg.k >= 0, "--k is required");
  require(cfg.route == "hooks" || cfg.route == "antisym", "--route must be hooks or antisym");
  CasimirImage img = cfg.route == "hooks" ? ch_g_via_hooks(rs, cfg.k) : ch_g_via_antisym(rs, cfg.k);
  switch (parse_format(cfg.format)) {
    case Format::Json: out << to_json(img).dump(2) << "\n"; break;
    case Format::Latex: out << image_latex(img, "\\mathbf{Ch}\\,G"); break;
    case Format::Text: out << image_text(img, "Ch G"); break;
  }
  return kSuccess;
}

int cmd_hc(const RunConfig& cfg, std::ostream& out) {
  RootSystem rs = system_of(cfg);
  require(cfg.ell >= 0, "--ell is required");
  CasimirImage img = hc_image(rs, cfg.ell);
  switch (parse_format(cfg.format)) {
    case Format::Json: out << to_json(img).dump(2) << "\n"; break;
    case Format::Latex: out << image_latex(img, "C^0"); break;
    case Format::Text: out << image_text(img, "C0"); break;
  }
  return kSuccess;
}

int cmd_eig(const RunConfig& cfg, std::ostream& out) {
  RootSystem rs = system_of(cfg);
  require(!cfg.lambda.empty(), "--lambda is required");
  require(cfg.ell >= 0, "--ell is required");
  Weight lam = parse_lambda(cfg.lambda, rs.rank);
  Rational s = parse_rational(cfg.s);
  Rational direct = eigenvalue_direct(rs, lam, cfg.ell, s);
  Rational via_hc = eigenvalue_via_hc(rs, lam, cfg.ell, s);
  const bool agree = direct == via_hc;
  switch (parse_format(cfg.format)) {
    case Format::Json: {
      Json j;
      j["type"] = std::string(1, to_char(rs.type));
      j["rank"] = rs.rank;
      j["lambda"] = to_json(lam);
      j["ell"] = cfg.ell;
      j["s"] = to_fraction_string(s);
      j["direct"] = to_fraction_string(direct);
      j["via_hc"] = to_fraction_string(via_hc);
      j["agree"] = agree;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Latex: out << "\\omega_{" << latex(lam) << "}(C_{n," << cfg.ell << "}) = " << latex(direct) << "\n"; break;
    case Format::Text:
      out << "direct " << to_fraction_string(direct) << "\nvia_hc " << to_fraction_string(via_hc) << "\n"
          << (agree ? "agree" : "DISAGREE") << "\n";
      break;
  }
  return agree ? kSuccess : kVerificationFailed;
}

int cmd_hook(const RunConfig& cfg, std::ostream& out) {
  RootSystem rs = system_of(cfg);
  require(cfg.k >= 0, "--k is required");
  auto cs = constituents(rs, cfg.k);
  switch (parse_format(cfg.format)) {
    case Format::Json: {
      Json j;
      j["type"] = std::string(1, to_char(rs.type));
      j["rank"] = rs.rank;
      j["k"] = cfg.k;
      Json arr = Json::array();
      for (const auto& c : cs) arr.push_back(to_json(c));
      j["constituents"] = arr;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Latex:
      for (const auto& c : cs) {
        std::string sign = c.multiplicity < 0 ? "-" : "+";
        if (c.constant) {
          out << sign << " q^{" << c.q_power << "}\n";
          continue;
        }
        out << sign << " q^{2n" << (c.q_power < 0 ? "" : "+") << c.q_power << "}\\chi";
        if (c.bar) out << "\\overline";
        out << "{(";
        for (std::size_t i = 0; i < c.partition.size(); ++i) out << (i ? "," : "") << c.partition[i];
        out << ")}\n";
      }
      break;
    case Format::Text:
      for (const auto& c : cs) out << to_string(c) << "\n";
      break;
  }
  return kSuccess;
}

int cmd_solve_basis(const RunConfig& cfg, std::ostream& out) {
  RootSystem rs = system_of(cfg);
  GenerationCertificate cert = certify(rs);
  TriangularSolution sol;
  bool solved = true;
  try {
    sol = triangular_solve(rs);
  } catch (const Error&) {
    solved = false;
  }
  const auto gn = g_names(rs.rank);
  switch (parse_format(cfg.format)) {
    case Format::Json: {
      Json j = to_json(cert);
      if (solved) j["solution"] = to_json(sol)["steps"];
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Latex:
      for (const auto& st : sol.steps) {
        out << "E_{" << st.k << "} = \\frac{G_{" << st.k << "}}{" << latex(st.s) << "}";
        if (!st.q_num.is_zero()) out << " + \\frac{" << latex(st.q_num, gn) << "}{" << latex(st.q_den()) << "}";
        out << "\n";
      }
      break;
    case Format::Text:
      for (const auto& st : sol.steps) {
        out << "E" << st.k << " = G" << st.k << " / (" << to_string(st.s) << ")";
        if (!st.q_num.is_zero()) out << " + [" << to_string(st.q_num, gn) << "] / (" << to_string(st.q_den()) << ")";
        out << "\n";
      }
      for (const auto& c : cert.checks) out << (c.passed ? "pass " : "FAIL ") << c.name << "\n";
      for (const auto& g : cert.extra_generators) out << "extra generator " << g.name << "\n";
      break;
  }
  return cert.passed() ? kSuccess : kVerificationFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyConfig vc;
  vc.suite = cfg.suite;
  vc.seed = cfg.seed;
  vc.points = cfg.points;
  vc.max_rank = cfg.max_rank;
  require(is_suite(cfg.suite), "unknown suite " + cfg.suite);
  require(cfg.max_rank >= 2 && cfg.max_rank <= 7, "--max-rank must lie in 2..7");
  if (!cfg.type.empty() && cfg.rank > 0) {
    vc.systems.emplace_back(parse_lie_type(cfg.type), cfg.rank);
  } else if (!cfg.type.empty()) {
    LieType t = parse_lie_type(cfg.type);
    for (auto sys : default_scope())
      if (sys.first == t) vc.systems.push_back(sys);
  } else if (cfg.rank > 0) {
    for (auto sys : default_scope())
      if (sys.second == cfg.rank) vc.systems.push_back(sys);
    require(!vc.systems.empty(), "no default system of rank " + std::to_string(cfg.rank));
  }
  for (auto [t, n] : vc.systems) (void)build_root_system(t, n);
  Format f = parse_format(cfg.format);
  require(f != Format::Latex, "verify reports are json or text");
  VerifyReport report = run_suite(vc);
  if (f == Format::Json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    for (const auto& c : report.cases) out << (c.passed ? "pass " : "FAIL ") << c.id << "  " << c.detail << "\n";
    out << report.pass_count() << "/" << report.cases.size() << " passed, seed " << report.seed << "\n";
  }
  return report.passed() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact higher-order quantum Casimir elements of types B, C, D"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_system = [&](CLI::App* sub, bool required) {
    auto* t = sub->add_option("--type", cfg.type, "Lie type B, C or D");
    auto* r = sub->add_option("--rank", cfg.rank, "rank n");
    if (required) {
      t->required();
      r->required();
    }
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, latex or text")->check(CLI::IsMember({"json", "latex", "text"}));
  };

  std::function<int()> action;
  auto command = [&](const char* name, const char* help, std::function<int(const RunConfig&, std::ostream&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn, &cfg, &out] { action = [fn, &cfg, &out] { return fn(cfg, out); }; });
    return sub;
  };

  auto* roots = command("roots", "root system data", cmd_roots);
  add_system(roots, true);
  add_format(roots);

  auto* chr = command("char", "Weyl character chi(lambda)", cmd_char);
  add_system(chr, true);
  add_format(chr);
  chr->add_option("--lambda", cfg.lambda, "highest weight as a,b,c (p/2 allowed)")->required();

  auto* gnk = command("gnk", "Ch G_{n,k}", cmd_gnk);
  add_system(gnk, true);
  add_format(gnk);
  gnk->add_option("--k", cfg.k, "k >= 0")->required();
  gnk->add_option("--route", cfg.route, "hooks or antisym")->check(CLI::IsMember({"hooks", "antisym"}));

  auto* hc = command("hc", "Harish-Chandra image of C_{n,l}", cmd_hc);
  add_system(hc, true);
  add_format(hc);
  hc->add_option("--ell", cfg.ell, "l >= 0")->required();

  auto* eig = command("eig", "eigenvalue of C_{n,l} on L(lambda), q = s^4", cmd_eig);
  add_system(eig, true);
  add_format(eig);
  eig->add_option("--lambda", cfg.lambda, "dominant weight as a,b,c (p/2 allowed)")->required();
  eig->add_option("--ell", cfg.ell, "l >= 0")->required();
  eig->add_option("--s", cfg.s, "rational s with q = s^4 (default 2)");

  auto* hook = command("hook", "hook constituents of Ch G_{n,k}", cmd_hook);
  add_system(hook, true);
  add_format(hook);
  hook->add_option("--k", cfg.k, "1 <= k <= n")->required();

  auto* solve = command("solve-basis", "triangular change of basis and generation certificate", cmd_solve_basis);
  add_system(solve, true);
  add_format(solve);

  auto* verify = command("verify", "run a verification suite", cmd_verify);
  add_system(verify, false);
  add_format(verify);
  verify->add_option("--suite", cfg.suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--points", cfg.points, "random points per oracle case")->check(CLI::PositiveNumber);
  verify->add_option("--max-rank", cfg.max_rank, "largest rank in the stability suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::CertificateFailed ? kVerificationFailed : kUsage;
  }
}

}  // namespace qcasimir::cli
