#include "zagier/identities/verify.hpp"

#include <chrono>
#include <complex>
#include <functional>
#include <random>

#include "zagier/errors.hpp"
#include "zagier/hyperlog/coproduct.hpp"
#include "zagier/identities/builders.hpp"
#include "zagier/numeric/polylog.hpp"

namespace zagier {
namespace {

constexpr int kRetryBudget = 10;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Values for the named variables: assigned ones become rational constants,
// the rest stay symbolic.
std::vector<FieldExpr> bind_values(const std::vector<std::string>& names, const NamedAssignment& values) {
  std::vector<FieldExpr> out;
  for (const auto& n : names) {
    auto it = values.find(n);
    out.push_back(it == values.end() ? FieldExpr::variable(n) : FieldExpr(it->second));
  }
  return out;
}

BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-97, 97), den(1, 97);
  return BigRational(num(rng), den(rng));
}

std::string describe(const NamedAssignment& a) {
  std::string s;
  for (const auto& [k, v] : a) s += (s.empty() ? "" : ",") + k + "=" + v.str();
  return s;
}

// One family of checks on a weight-4 combination.
void decide(const std::string& prefix, const IComb& c, Decider d, std::uint64_t seed,
            std::vector<CheckReport>& out) {
  if (d != Decider::rho) {
    const auto t0 = Clock::now();
    auto rep = report_from(prefix + "/chain", is_zero(cobracket_chain(c)));
    rep.elapsed_ms = ms_since(t0);
    rep.seed = seed;
    out.push_back(std::move(rep));
  }
  if (d != Decider::chain) {
    const auto t0 = Clock::now();
    auto rep = report_from(prefix + "/rho", is_zero(rho_project(symbol(c))));
    rep.elapsed_ms = ms_since(t0);
    rep.seed = seed;
    out.push_back(std::move(rep));
  }
}

// Builds the object under test for a binding of its variables.
using Builder = std::function<void(const std::vector<FieldExpr>&, const std::string&, std::vector<CheckReport>&)>;

void run_bindings(const std::string& name, const std::vector<std::string>& vars, const VerifyOptions& opts,
                  const Builder& build, std::vector<CheckReport>& out) {
  if (!opts.random) {
    const NamedAssignment fixed = opts.assignment.value_or(NamedAssignment{});
    const std::string label = fixed.empty() ? name : name + "[" + describe(fixed) + "]";
    build(bind_values(vars, fixed), label, out);
    return;
  }
  std::mt19937_64 rng(opts.seed);
  for (unsigned trial = 0; trial < opts.trials; ++trial) {
    for (int attempt = 0;; ++attempt) {
      NamedAssignment values = opts.assignment.value_or(NamedAssignment{});
      for (const auto& v : vars)
        if (!values.count(v)) values[v] = random_rational(rng);
      std::vector<CheckReport> trial_out;
      try {
        build(bind_values(vars, values), name + "/random#" + std::to_string(trial) + "[" + describe(values) + "]",
              trial_out);
      } catch (const DegenerateArgument&) {
        if (attempt + 1 >= kRetryBudget) throw;
        continue;
      } catch (const DivergentTerm&) {
        if (attempt + 1 >= kRetryBudget) throw;
        continue;
      }
      for (auto& r : trial_out) out.push_back(std::move(r));
      break;
    }
  }
}

Points6 six(const std::vector<FieldExpr>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

// Φ under C ↦ tC + (1−t)A, D ↦ tD + (1−t)A, specialized at t = 0 term by term.
CheckReport t0_tautology(const std::vector<FieldExpr>& v, const std::string& label) {
  const auto t0 = Clock::now();
  const FieldExpr t = FieldExpr::variable("t");
  const FieldExpr one(1);
  std::vector<FieldExpr> w = v;
  w[2] = t * v[2] + (one - t) * v[0];
  w[3] = t * v[3] + (one - t) * v[0];
  const IComb phi = build_theorem3_discrepancy(six(w));
  const auto tid = *VariableTable::global().find("t");

  auto at_zero = [&](const PPoint& p) -> PPoint {
    if (p.is_infinity()) return p;
    return PPoint(p.expr().substitute(tid, FieldExpr(0)));
  };
  IComb specialized;
  std::vector<std::string> degenerate;
  for (const auto& [term, c] : phi.terms()) {
    try {
      ITerm s{at_zero(term.a0), {}, at_zero(term.end)};
      for (const auto& p : term.word) s.word.push_back(at_zero(p));
      specialized.add(s, c);
    } catch (const DegenerateArgument&) {
      degenerate.push_back(c.str() + " * " + term.str());
    }
  }
  CheckReport rep;
  rep.name = label + "/formal";
  rep.residual_count = specialized.size() + degenerate.size();
  for (const auto& d : degenerate)
    if (rep.residual_sample.size() < 10) rep.residual_sample.push_back("degenerate: " + d);
  for (const auto& [term, c] : specialized.terms())
    if (rep.residual_sample.size() < 10) rep.residual_sample.push_back(c.str() + " * " + term.str());
  rep.status = rep.residual_count == 0 ? CheckStatus::pass : CheckStatus::fail;
  rep.message = std::to_string(phi.size()) + " terms before specialization, " + std::to_string(degenerate.size()) +
                " degenerate at t=0, " + std::to_string(specialized.size()) + " left after pair cancellation";
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

}  // namespace

std::optional<VerifyTarget> parse_target(const std::string& name) {
  if (name == "theorem3") return VerifyTarget::theorem3;
  if (name == "fiveterm") return VerifyTarget::fiveterm;
  if (name == "b-element") return VerifyTarget::b_element;
  if (name == "antisym31") return VerifyTarget::antisym31;
  if (name == "t0-tautology") return VerifyTarget::t0_tautology;
  return std::nullopt;
}

std::string target_name(VerifyTarget t) {
  switch (t) {
    case VerifyTarget::theorem3: return "theorem3";
    case VerifyTarget::fiveterm: return "fiveterm";
    case VerifyTarget::b_element: return "b-element";
    case VerifyTarget::antisym31: return "antisym31";
    case VerifyTarget::t0_tautology: return "t0-tautology";
  }
  return "?";
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::error: return "error";
  }
  return "?";
}

CheckReport report_from(const std::string& name, const ZeroCheck& z) {
  CheckReport r;
  r.name = name;
  r.status = z.zero ? CheckStatus::pass : CheckStatus::fail;
  r.residual_count = z.residual_count;
  r.residual_sample = z.sample;
  return r;
}

NamedAssignment parse_assignment(const std::string& text) {
  NamedAssignment out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip();
    const std::size_t name_start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    if (pos == name_start) throw ParseError("expected a variable name", pos);
    const std::string name = text.substr(name_start, pos - name_start);
    skip();
    if (pos >= text.size() || text[pos] != '=') throw ParseError("expected '='", pos);
    ++pos;
    skip();
    const std::size_t value_start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    const std::string value = text.substr(value_start, pos - value_start);
    try {
      const auto slash = value.find('/');
      if (slash == std::string::npos) {
        out[name] = BigRational(mpq_class(value));
      } else {
        out[name] = BigRational(mpz_class(value.substr(0, slash)), mpz_class(value.substr(slash + 1)));
      }
    } catch (const std::exception&) {
      throw ParseError("bad rational '" + value + "'", value_start);
    }
    skip();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return out;
}

double fiveterm_numeric_residual(unsigned pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2, 2);
  double worst = 0;
  unsigned done = 0;
  using cd = std::complex<double>;
  while (done < pairs) {
    const cd x(u(rng), u(rng)), y(u(rng), u(rng));
    const cd args[] = {x, y, x / y, (1.0 - x) / (1.0 - y), (1.0 - 1.0 / x) / (1.0 - 1.0 / y)};
    bool ok = std::abs(x - y) > 1e-3;
    for (const auto& a : args) ok = ok && std::abs(a) > 1e-3 && std::abs(a - 1.0) > 1e-3 && std::abs(a) < 1e3;
    if (!ok) continue;
    const double c[] = {1, -1, -1, 1, -1};
    double s = 0;
    for (int i = 0; i < 5; ++i) s += c[i] * bloch_wigner(args[i]);
    worst = std::max(worst, std::abs(s));
    ++done;
  }
  return worst;
}

std::vector<CheckReport> run_verify(VerifyTarget target, const VerifyOptions& opts) {
  std::vector<CheckReport> out;
  const std::uint64_t seed = opts.seed;
  switch (target) {
    case VerifyTarget::theorem3:
      run_bindings("theorem3", {"A", "B", "C", "D", "E", "F"}, opts,
                   [&](const std::vector<FieldExpr>& v, const std::string& label, std::vector<CheckReport>& o) {
                     decide(label, build_theorem3_discrepancy(six(v)), opts.decider, seed, o);
                   },
                   out);
      break;
    case VerifyTarget::antisym31:
      run_bindings("antisym31", {"t", "u"}, opts,
                   [&](const std::vector<FieldExpr>& v, const std::string& label, std::vector<CheckReport>& o) {
                     IComb c(sym_31(v[0], v[1]));
                     c.add(sym_31(v[1], v[0]));
                     decide(label, c, opts.decider, seed, o);
                   },
                   out);
      break;
    case VerifyTarget::fiveterm:
      run_bindings("fiveterm", {"x", "y"}, opts,
                   [&](const std::vector<FieldExpr>& v, const std::string& label, std::vector<CheckReport>& o) {
                     const auto t0 = Clock::now();
                     WedgeTensor acc(2);
                     for (const auto& [a, c] : build_A(v[0], v[1]))
                       acc += delta2(polylog_embedding(2, a)).scaled(c);
                     auto rep = report_from(label + "/delta2", is_zero(acc));
                     rep.elapsed_ms = ms_since(t0);
                     rep.seed = seed;
                     o.push_back(std::move(rep));
                   },
                   out);
      {
        const auto t0 = Clock::now();
        CheckReport rep;
        rep.name = "fiveterm/numeric";
        const double r = fiveterm_numeric_residual(100, seed);
        rep.status = r < 1e-9 ? CheckStatus::pass : CheckStatus::fail;
        rep.residual_count = r < 1e-9 ? 0 : 1;
        rep.message = "max |sum c_i D(x_i)| over 100 random complex pairs = " + std::to_string(r);
        if (rep.residual_count) rep.residual_sample.push_back(rep.message);
        rep.elapsed_ms = ms_since(t0);
        rep.seed = seed;
        out.push_back(std::move(rep));
      }
      break;
    case VerifyTarget::b_element:
      run_bindings("b-element", {"x", "y", "z"}, opts,
                   [&](const std::vector<FieldExpr>& v, const std::string& label, std::vector<CheckReport>& o) {
                     const auto t0 = Clock::now();
                     auto rep = report_from(label + "/delta22", is_zero(delta22_pushed(build_B(v[0], v[1], v[2]))));
                     rep.elapsed_ms = ms_since(t0);
                     rep.seed = seed;
                     o.push_back(std::move(rep));
                   },
                   out);
      break;
    case VerifyTarget::t0_tautology:
      run_bindings("t0-tautology", {"A", "B", "C", "D", "E", "F"}, opts,
                   [&](const std::vector<FieldExpr>& v, const std::string& label, std::vector<CheckReport>& o) {
                     auto rep = t0_tautology(v, label);
                     rep.seed = seed;
                     o.push_back(std::move(rep));
                   },
                   out);
      break;
  }
  return out;
}

}  // namespace zagier
