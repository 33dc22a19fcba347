// Command-line front end: verify identities, print symbols, evaluate numerics.
//
// Exit codes: 0 pass, 1 fail, 2 usage or parse error, 3 degenerate input or
// divergent term.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zagier/cli/parser.hpp"
#include "zagier/errors.hpp"
#include "zagier/hyperlog/symbol.hpp"
#include "zagier/identities/verify.hpp"
#include "zagier/numeric/iterated.hpp"
#include "zagier/numeric/polylog.hpp"
#include "zagier/zeta/zeta.hpp"

using namespace zagier;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.3.0";
constexpr const char* kSchema = "zagier-report/1";

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kDegenerate = 3 };

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ZAGIER_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed ZAGIER_SEED='" << env << "'\n";
    }
  }
  return 20240607;
}

json envelope(const std::string& command) {
  return json{{"schema", kSchema}, {"tool_version", kVersion}, {"command", command}};
}

json to_json(const CheckReport& r, bool timing) {
  json j{{"check", r.name},
         {"status", status_name(r.status)},
         {"residual_count", r.residual_count},
         {"residual_sample", r.residual_sample},
         {"seed", r.seed},
         {"tool_version", kVersion}};
  if (!r.message.empty()) j["message"] = r.message;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string complex_str(std::complex<double> z) {
  std::ostringstream os;
  os.precision(16);
  os << z.real();
  if (z.imag() != 0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic and numeric checks for weight-4 hyperlogarithm identities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  bool json_out = false;
  bool no_timing = false;

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string target;
  std::string specialize;
  unsigned trials = 20;
  std::uint64_t seed = default_seed();
  std::string decider = "both";
  verify->add_option("target", target, "theorem3 | fiveterm | b-element | antisym31 | t0-tautology")->required();
  verify->add_option("--specialize", specialize, "'random' or assignments such as \"A=0,B=1/2\"");
  verify->add_option("--trials", trials, "Random specializations to draw")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for random specializations (default: $ZAGIER_SEED)");
  verify->add_option("--decider", decider, "chain | rho | both")->check(CLI::IsMember({"chain", "rho", "both"}));
  verify->add_flag("--json", json_out, "JSON report on standard output");
  verify->add_flag("--no-timing", no_timing, "Omit elapsed times (byte-stable output)");

  // symbol
  auto* sym = app.add_subcommand("symbol", "Print the symbol of I(a0; a1,...,an; a_end)");
  std::string expr;
  bool mod_shuffle = false;
  bool regularized = false;
  sym->add_option("expr", expr, "Iterated integral, e.g. \"I(0; 1/x, 0; 1)\"")->required();
  sym->add_flag("--mod-shuffle", mod_shuffle, "Project away shuffle products");
  sym->add_flag("--regularized", regularized, "Allow divergent endpoints");
  sym->add_flag("--json", json_out, "JSON output");

  // eval
  auto* eval = app.add_subcommand("eval", "Numeric evaluation");
  eval->require_subcommand(1);
  eval->add_flag("--json", json_out, "JSON output");
  int n = 2;
  std::string z_text;
  auto* li = eval->add_subcommand("li", "Li_n(z), principal branch");
  li->add_option("-n", n, "Weight")->required()->check(CLI::Range(1, 40));
  li->add_option("-z", z_text, "Argument, e.g. 0.3+0.1i")->required();
  li->add_flag("--json", json_out, "JSON output");
  auto* sv = eval->add_subcommand("svp", "Single-valued polylogarithm");
  sv->add_option("-n", n, "Weight")->required()->check(CLI::Range(2, 40));
  sv->add_option("-z", z_text, "Argument")->required();
  sv->add_flag("--json", json_out, "JSON output");
  auto* iint = eval->add_subcommand("iint", "Iterated integral along the straight path");
  std::string iexpr;
  iint->add_option("expr", iexpr, "Iterated integral with rational points")->required();
  iint->add_flag("--json", json_out, "JSON output");
  auto* zc = eval->add_subcommand("zeta-check", "Rational reconstruction of zeta_F(2) sqrt|D| / (pi^2 D(y))");
  long D = -4;
  std::string y_text = "i";
  long max_den = 10000;
  double tol = 1e-8;
  zc->add_option("-D", D, "Negative fundamental discriminant")->required();
  zc->add_option("-y", y_text, "Element: i, a,b,c or (a+b*sqrt(D))/c")->required();
  zc->add_option("--max-denominator", max_den, "Reconstruction bound")->check(CLI::PositiveNumber);
  zc->add_option("--tolerance", tol, "Reconstruction tolerance")->check(CLI::PositiveNumber);
  zc->add_flag("--json", json_out, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  // Failures still produce a report document when JSON was requested.
  auto emit_error = [&](const char* kind, const std::string& message) {
    if (!json_out) return;
    json doc = envelope(*verify ? "verify " + target : *sym ? "symbol" : "eval");
    doc["status"] = "error";
    doc["error"] = {{"kind", kind}, {"message", message}};
    std::cout << doc.dump(2) << "\n";
  };

  try {
    if (*verify) {
      const auto tgt = parse_target(target);
      if (!tgt) {
        std::cerr << "unknown target '" << target << "'\n";
        return kUsage;
      }
      VerifyOptions opts;
      opts.decider = decider == "chain" ? Decider::chain : decider == "rho" ? Decider::rho : Decider::both;
      opts.trials = trials;
      opts.seed = seed;
      if (specialize == "random") {
        opts.random = true;
      } else if (!specialize.empty()) {
        opts.assignment = parse_assignment(specialize);
      }
      const auto reports = run_verify(*tgt, opts);
      bool all = true;
      json checks = json::array();
      for (const auto& r : reports) {
        all = all && r.status == CheckStatus::pass;
        checks.push_back(to_json(r, !no_timing));
        std::cerr << status_name(r.status) << "  " << r.name << "  residual=" << r.residual_count;
        if (!no_timing) std::cerr << "  " << r.elapsed_ms << " ms";
        std::cerr << "\n";
        for (const auto& s : r.residual_sample) std::cerr << "    " << s << "\n";
      }
      if (json_out) {
        json doc = envelope("verify " + target);
        doc["checks"] = checks;
        doc["status"] = all ? "pass" : "fail";
        std::cout << doc.dump(2) << "\n";
      }
      return all ? kPass : kFail;
    }

    if (*sym) {
      const ITerm t = parse_iterm(expr);
      TensorElement s = symbol(t, regularized);
      if (mod_shuffle) s = rho_project(s);
      if (json_out) {
        json doc = envelope("symbol");
        doc["input"] = t.str();
        doc["weight"] = s.weight();
        doc["mod_shuffle"] = mod_shuffle;
        doc["terms"] = s.size();
        json rows = json::array();
        for (const auto& r : s.rendered()) rows.push_back({{"coef", r.coef.str()}, {"atoms", r.atoms}});
        doc["symbol"] = rows;
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << (s.weight() == 0 && !s.empty() ? "1 (unit, weight 0)" : s.str()) << "\n";
      }
      return kPass;
    }

    if (*eval) {
      json doc = envelope("eval");
      if (*li || *sv) {
        const auto z = parse_complex(z_text);
        if (*li) {
          const auto v = li_n(n, ComplexVal(z));
          doc["kind"] = "li";
          doc["value"] = {v.re(), v.im()};
          doc["error"] = v.err;
          if (!json_out) std::cout << complex_str(v.v) << "  (+/- " << v.err << ")\n";
        } else {
          const double v = svp(n, z);
          doc["kind"] = "svp";
          doc["value"] = v;
          if (!json_out) std::cout.precision(16), std::cout << v << "\n";
        }
      } else if (*iint) {
        const ITerm t = parse_iterm(iexpr);
        auto numeric = [](const PPoint& p) -> std::complex<double> {
          if (p.is_infinity() || !p.expr().is_constant())
            throw DegenerateArgument("iint needs finite rational points, got " + p.str());
          return p.expr().constant_value().to_double();
        };
        std::vector<std::complex<double>> word;
        for (const auto& p : t.word) word.push_back(numeric(p));
        const auto v = iterated_integral_num(numeric(t.a0), word, numeric(t.end));
        doc["kind"] = "iint";
        doc["input"] = t.str();
        doc["value"] = {v.re(), v.im()};
        doc["error"] = v.err;
        if (!json_out) std::cout << complex_str(v.v) << "  (+/- " << v.err << ")\n";
      } else if (*zc) {
        ReconstructionConfig cfg{max_den, tol};
        const auto rep = zagier_check_n2(D, parse_quad_element(y_text, D), cfg);
        const bool ok = rep.rational.has_value() && rep.stable;
        doc["kind"] = "zeta-check";
        doc["D"] = rep.D;
        doc["y"] = rep.y;
        doc["zeta_F_2"] = rep.zeta;
        doc["bloch_wigner"] = rep.D_y;
        doc["q"] = rep.q;
        doc["rational"] = rep.rational ? rep.rational->str() : "";
        doc["stable"] = rep.stable;
        doc["status"] = ok ? "pass" : "fail";
        if (!json_out) {
          std::cout.precision(16);
          std::cout << "q = " << rep.q << "  ~  " << (rep.rational ? rep.rational->str() : "no rational")
                    << (rep.stable ? "  (stable)" : "  (unstable)") << "\n";
        }
        if (json_out) std::cout << doc.dump(2) << "\n";
        return ok ? kPass : kFail;
      }
      if (json_out) std::cout << doc.dump(2) << "\n";
      return kPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    emit_error("ParseError", e.what());
    return kUsage;
  } catch (const DegenerateArgument& e) {
    std::cerr << "degenerate argument: " << e.what() << "\n";
    emit_error("DegenerateArgument", e.what());
    return kDegenerate;
  } catch (const DivergentTerm& e) {
    std::cerr << "divergent term: " << e.what() << "\n";
    emit_error("DivergentTerm", e.what());
    return kDegenerate;
  } catch (const DegenerateWitness& e) {
    std::cerr << "degenerate witness: " << e.what() << "\n";
    emit_error("DegenerateWitness", e.what());
    return kDegenerate;
  } catch (const BranchAmbiguity& e) {
    std::cerr << "branch ambiguity: " << e.what() << "\n";
    emit_error("BranchAmbiguity", e.what());
    return kDegenerate;
  } catch (const PathError& e) {
    std::cerr << "path error: " << e.what() << "\n";
    emit_error("PathError", e.what());
    return kDegenerate;
  } catch (const InvalidDiscriminant& e) {
    std::cerr << "invalid discriminant: " << e.what() << "\n";
    emit_error("InvalidDiscriminant", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
