#include "suites.hpp"

#include "sbo/expansion.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace sbo;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::vector<Rational> parse_vector(const std::string& s, const char* what) {
  std::vector<Rational> v;
  try {
    for (const auto& t : split(s)) v.push_back(parse_rational(t));
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + what + " '" + s + "'");
  }
  return v;
}

// "010" or "0,1,0".
Parities parse_parities(const std::string& s, const char* what) {
  Parities p;
  for (char c : s) {
    if (c == ',' || c == ' ') continue;
    if (c != '0' && c != '1') throw UsageError(std::string("parities ") + what + " must be 0/1");
    p.push_back(c - '0');
  }
  return p;
}

std::vector<unsigned> parse_alpha(const std::string& s) {
  std::vector<unsigned> a;
  for (const auto& t : split(s)) {
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || *end || v < 0) throw UsageError("alpha must be a list of naturals");
    a.push_back(static_cast<unsigned>(v));
  }
  return a;
}

const char* slot_latex(int s) {
  static const char* names[6] = {"\\Phi_{1}", "\\Phi_{2}", "\\Phi_{3}", "\\Psi_{1}", "\\Psi_{2}", "\\Psi_{3}"};
  return names[s];
}
const char* slot_text(int s) {
  static const char* names[6] = {"Phi1", "Phi2", "Phi3", "Psi1", "Psi2", "Psi3"};
  return names[s];
}

std::string pbw_monomial(const PbwKey& k, bool latex) {
  static const char* gl[3] = {"\\varepsilon^{2,1}", "\\varepsilon^{3,2}", "\\varepsilon^{3,1}"};
  static const char* gt[3] = {"e21", "e32", "e31"};
  std::string out;
  for (int s = 0; s < 6; ++s)
    for (int e = 0; e < k.f[s]; ++e) out += (latex ? "" : (out.empty() ? "" : "*")) + std::string(latex ? slot_latex(s) : slot_text(s));
  for (int g = 0; g < 3; ++g) {
    if (!k.w[g]) continue;
    const std::string base = latex ? gl[g] : gt[g];
    const std::string p = k.w[g] > 1 ? (latex ? "{}^{" + std::to_string(k.w[g]) + "}" : "^" + std::to_string(k.w[g])) : "";
    out += (latex || out.empty() ? "" : "*") + (latex && k.w[g] > 1 ? "\\left(" + base + "\\right)^{" + std::to_string(k.w[g]) + "}" : base + (latex ? "" : p));
  }
  return out.empty() ? "1" : out;
}

// c as +-const * prod lambda_{a,b}^e when it factors that way, else empty.
std::string lambda_factored_latex(const RationalFunction& c, int n) {
  if (!c.is_polynomial() || c.is_constant()) return "";
  Polynomial p = c.as_polynomial();
  const AffineVec L = lambda_symbols(n);
  std::string factors;
  for (int a = n + 1; a >= 1; --a)
    for (int b = 1; b <= n + 1; ++b) {
      if (a == b) continue;
      int e = 0;
      while (!p.is_constant()) {
        auto q = divide_exact(p, lambda_ab(L, a, b));
        if (!q) break;
        p = *q;
        ++e;
      }
      if (e) factors += "\\lambda_{" + std::to_string(a) + "," + std::to_string(b) + "}" + (e > 1 ? "^{" + std::to_string(e) + "}" : "");
    }
  if (!p.is_constant()) return "";
  const Rational k = p.constant_value();
  if (k == 1) return factors;
  if (k == -1) return "-" + factors;
  return RationalFunction(k).to_latex() + factors;
}

std::string pbw_render(const PbwElement& e, bool latex) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : e.terms()) {
    const std::string mono = pbw_monomial(k, latex);
    std::string coef;
    if (c == RationalFunction(1)) {
      coef = "";
    } else if (c == RationalFunction(-1)) {
      coef = "-";
    } else if (const std::string f = latex ? lambda_factored_latex(c, 2) : ""; !f.empty()) {
      coef = f;
    } else {
      coef = latex ? "\\left(" + c.to_latex() + "\\right)" : "(" + c.to_string() + ")*";
    }
    std::string term = coef + (mono == "1" && !coef.empty() && coef != "-" ? (latex ? "" : "1") : mono);
    if (mono == "1" && coef.empty()) term = "1";
    if (mono == "1" && coef == "-") term = "-1";
    if (out.empty())
      out = term;
    else
      out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
  }
  return out;
}

struct ConstructArgs {
  int n = 2;
  std::string op;
  int i = 0;
  std::optional<int> k;
  std::string alpha, lambda, output = "latex";
};

int cmd_construct(const ConstructArgs& a) {
  if (a.n < 1 || a.n > 8) throw UsageError("n out of range");
  AffineVec lam = lambda_symbols(a.n);
  if (!a.lambda.empty()) {
    const auto v = parse_vector(a.lambda, "lambda");
    if (static_cast<int>(v.size()) != a.n + 1) throw UsageError("lambda needs n+1 entries");
    lam.clear();
    for (const auto& q : v) lam.push_back(AffineForm(q));
  }
  std::string name;
  std::vector<Factor> factors;
  if (a.op == "D" || a.op == "F") {
    if (a.i < 1 || a.i > a.n + 1) throw std::out_of_range("index out of range");
    name = a.op + std::to_string(a.i);
    factors = {{a.op == "D" ? OpKind::D : OpKind::F, a.i}};
  } else if (a.op == "L") {
    if (!a.k) throw UsageError("--op L needs --k");
    if (*a.k < 0 || *a.k > a.n) throw std::out_of_range("index out of range");
    const auto alpha = parse_alpha(a.alpha);
    if (static_cast<int>(alpha.size()) != a.n) throw UsageError("alpha needs n entries");
    factors = L_factors(alpha, *a.k, a.n);
    name = "L_{" + a.alpha + "}," + std::to_string(*a.k);
  } else {
    throw UsageError("--op must be D, F or L");
  }
  auto build = [&](auto alg) {
    if (a.op == "L") return build_L_with(alg, parse_alpha(a.alpha), *a.k, lam, a.n);
    return a.op == "D" ? build_D_with(alg, a.i, lam, a.n) : build_F_with(alg, a.i, lam, a.n);
  };
  std::vector<std::string> fnames;
  for (const auto& f : factors) fnames.push_back(std::string(f.kind == OpKind::D ? "D" : "F") + std::to_string(f.index));
  std::string composition;
  for (std::size_t j = 0; j < fnames.size(); ++j) composition += (j ? " o " : "") + fnames[j];
  if (composition.empty()) composition = "identity";

  const WeylElement w = build(MatrixWeyl(a.n));
  std::optional<PbwElement> pbw;
  if (a.n == 2) pbw = build(PbwAlg{});

  if (a.output == "json") {
    nlohmann::ordered_json j;
    j["operator"] = name;
    j["n"] = a.n;
    j["composition"] = composition;
    j["lambda"] = nlohmann::ordered_json::array();
    for (const auto& l : lam) j["lambda"].push_back(l.to_string());
    if (pbw) {
      j["latex"] = pbw_render(*pbw, true);
      j["pbw"] = nlohmann::ordered_json::array();
      for (const auto& [k, c] : pbw->terms())
        j["pbw"].push_back({{"functions", std::vector<int>(k.f.begin(), k.f.end())},
                            {"word", std::vector<int>(k.w.begin(), k.w.end())},
                            {"coefficient", c.to_string()}});
    }
    j["weyl"] = nlohmann::ordered_json::array();
    const int nv = w.space()->nv();
    for (const auto& [key, c] : w.terms())
      j["weyl"].push_back({{"x", std::vector<int>(key.begin(), key.begin() + nv)},
                           {"d", std::vector<int>(key.begin() + nv, key.end())},
                           {"coefficient", c.to_string()}});
    std::cout << j.dump(2) << "\n";
  } else if (a.output == "latex") {
    if (a.op == "L") std::cout << "% " << name << " = " << composition << "\n";
    std::cout << (pbw ? pbw_render(*pbw, true) : w.to_latex()) << "\n";
  } else if (a.output == "text") {
    std::cout << name << (a.op == "L" ? " = " + composition : "") << "\n";
    if (pbw) std::cout << pbw_render(*pbw, false) << "\n";
    std::cout << "normal form: " << w.to_string() << "\n";
  } else {
    throw UsageError("--output must be latex, json or text");
  }
  return 0;
}

struct VerifyArgs {
  std::string suite, lambda, nu, xi, eta, alpha, mode = "numeric", output = "json", report;
  std::optional<int> n, k;
  std::uint64_t seed = 1;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a) {
  RunConfig cfg;
  cfg.n = a.n;
  cfg.k = a.k;
  if (!a.lambda.empty()) cfg.lambda = parse_vector(a.lambda, "lambda");
  if (!a.nu.empty()) cfg.nu = parse_vector(a.nu, "nu");
  cfg.xi = parse_parities(a.xi, "xi");
  cfg.eta = parse_parities(a.eta, "eta");
  if (!a.alpha.empty()) cfg.alpha = parse_alpha(a.alpha);
  cfg.seed = a.seed;
  if (a.mode != "numeric" && a.mode != "symbolic") throw UsageError("--mode must be symbolic or numeric");
  cfg.mode = a.mode == "numeric" ? RunMode::Numeric : RunMode::Symbolic;
  cfg.output = a.output;
  cfg.timing = a.timing;
  if (a.output != "json" && a.output != "text" && a.output != "latex")
    throw UsageError("--output must be json, text or latex");
  if (a.suite != "all" && std::find(suite_names().begin(), suite_names().end(), a.suite) == suite_names().end())
    throw UsageError("unknown suite '" + a.suite + "'");

  const auto reports = run_suites(a.suite, cfg);
  std::string body;
  if (a.output == "json")
    body = to_json(reports, cfg).dump(2) + "\n";
  else if (a.output == "text")
    body = to_text(reports);
  else
    body = to_latex(reports);
  std::cout << body;

  std::string path = a.report;
  if (path.empty())
    if (const char* dir = std::getenv("SBO_REPORT_DIR"))
      path = (std::filesystem::path(dir) / ("report-" + a.suite + "." + (a.output == "text" ? "txt" : a.output == "latex" ? "tex" : "json"))).string();
  if (!path.empty()) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << body;
  }
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of differential symmetry breaking operators"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "emit D_i, F_i or L_{alpha,k}");
  construct->add_option("--n", ca.n, "size parameter n")->capture_default_str();
  construct->add_option("--op", ca.op, "D, F or L")->required();
  construct->add_option("--i", ca.i, "index of D_i / F_i");
  construct->add_option("--k", ca.k, "support index k of L");
  construct->add_option("--alpha", ca.alpha, "exponents of L, comma separated");
  construct->add_option("--lambda", ca.lambda, "numeric lambda (default symbolic)");
  construct->add_option("--output", ca.output, "latex, json or text")->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", va.suite, "restriction, bernstein-sato, expansion, residue-scalar, n2-classify, algebra-axioms, all")
      ->required();
  verify->add_option("--n", va.n, "size parameter n");
  verify->add_option("--k", va.k, "support index k");
  verify->add_option("--lambda", va.lambda, "rational lambda vector");
  verify->add_option("--nu", va.nu, "rational nu vector");
  verify->add_option("--xi", va.xi, "parities of lambda, e.g. 010");
  verify->add_option("--eta", va.eta, "parities of nu, e.g. 01");
  verify->add_option("--alpha", va.alpha, "natural vector alpha");
  verify->add_option("--seed", va.seed, "seed of every random point")->capture_default_str();
  verify->add_option("--mode", va.mode, "symbolic or numeric")->capture_default_str();
  verify->add_option("--output", va.output, "json, text or latex")->capture_default_str();
  verify->add_option("--report", va.report, "also write the report to this file");
  verify->add_flag("--timing", va.timing, "record measured millis in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (*construct) return cmd_construct(ca);
    return cmd_verify(va);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
