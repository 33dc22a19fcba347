// One pass/fail line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "shuffle_kernel.hpp"
#include "zagier/hyperlog/coproduct.hpp"
#include "zagier/identities/verify.hpp"
#include "zagier/numeric/iterated.hpp"
#include "zagier/numeric/polylog.hpp"
#include "zagier/zeta/zeta.hpp"

using namespace zagier;

namespace {

constexpr std::uint64_t kSeed = 20240607;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string summarize(const std::vector<CheckReport>& reports, bool& all) {
  all = true;
  std::size_t failed = 0, residual = 0;
  for (const auto& r : reports) {
    if (r.status != CheckStatus::pass) {
      all = false;
      ++failed;
      residual += r.residual_count;
    }
  }
  std::ostringstream os;
  os << reports.size() << " checks, " << failed << " failing";
  if (failed) os << ", " << residual << " residual terms";
  for (const auto& r : reports)
    if (r.status != CheckStatus::pass) {
      os << "; first: " << r.name;
      break;
    }
  return os.str();
}

Outcome verify_target(VerifyTarget t, bool random, unsigned trials = 20) {
  VerifyOptions opts;
  opts.random = random;
  opts.trials = trials;
  opts.seed = kSeed;
  bool all = false;
  const std::string s = summarize(run_verify(t, opts), all);
  return {all, s};
}

Outcome random_theorem3() {
  VerifyOptions opts;
  opts.random = true;
  opts.trials = 20;
  opts.seed = kSeed;
  auto reports = run_verify(VerifyTarget::theorem3, opts);
  VerifyOptions fixed;
  fixed.assignment = parse_assignment("A=0,B=1,C=3,D=7,E=19,F=31");
  for (auto& r : run_verify(VerifyTarget::theorem3, fixed)) reports.push_back(std::move(r));
  bool all = false;
  const std::string s = summarize(reports, all);
  return {all, s};
}

Outcome kernel_oracle() {
  const std::vector<MultElement> alphabet{FieldExpr::variable("p").log(), FieldExpr::variable("q").log(),
                                          (FieldExpr::variable("p") + FieldExpr(BigRational(1))).log()};
  bool ok = true;
  std::ostringstream os;
  for (unsigned n = 2; n <= 3; ++n) {
    const auto r = kernel_check::run(alphabet, n);
    ok = ok && r.shuffles_in_kernel && r.kernel_dim == r.shuffle_rank;
    os << "weight " << n << ": dim ker = " << r.kernel_dim << ", shuffle rank = " << r.shuffle_rank << "; ";
  }
  return {ok, os.str()};
}

Outcome convention_pinning() {
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> radius(0.02, 0.5), angle(-3.14159, 3.14159);
  double worst_li = 0;
  for (int i = 0; i < 50; ++i) {
    const cplx z = std::polar(radius(rng), angle(rng));
    for (int n = 1; n <= 4; ++n) {
      std::vector<cplx> w{1.0 / z};
      for (int k = 1; k < n; ++k) w.push_back(0.0);
      const cplx num = -iterated_integral_num(0.0, w, 1.0).v;
      worst_li = std::max(worst_li, std::abs(num - li_n(n, z).v));
    }
  }
  std::uniform_real_distribution<double> box(-3, 3);
  double worst_bw = 0;
  for (int i = 0; i < 100; ++i) {
    const cplx z(box(rng), box(rng));
    worst_bw = std::max(worst_bw, std::abs(svp(2, z) - oracle::bloch_wigner(z)));
  }
  std::ostringstream os;
  os << "max |iint - li_n| = " << worst_li << ", max |svp2 - D| = " << worst_bw;
  return {worst_li < 1e-10 && worst_bw < 1e-10, os.str()};
}

Outcome zagier_n2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r4 = zagier_check_n2(-4, parse_quad_element("i", -4));
  const auto r3 = zagier_check_n2(-3, parse_quad_element("(1+sqrt(-3))/2", -3));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto show = [](const ZagierReport& r) {
    return "D=" + std::to_string(r.D) + ": " + (r.rational ? r.rational->str() : "none") +
           (r.stable ? " stable" : " unstable");
  };
  std::ostringstream os;
  os << show(r4) << ", " << show(r3) << ", " << secs << " s";
  const bool ok = r4.rational && r4.stable && r3.rational && r3.stable && secs <= 60;
  return {ok, os.str()};
}

Outcome affine_invariance() {
  std::vector<PPoint> pts;
  for (const char* n : {"A", "B", "C", "D", "E", "F"}) pts.push_back(PPoint::variable(n));
  const TensorElement s = symbol(ITerm{pts[0], {pts[1], pts[2], pts[3], pts[4]}, pts[5]});
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> num(-97, 97), den(1, 97);
  int ok = 0;
  for (int i = 0; i < 10; ++i) {
    int a = 0;
    while (a == 0) a = num(rng);
    const FieldExpr alpha(BigRational(a, den(rng)));
    const FieldExpr beta(BigRational(num(rng), den(rng)));
    const auto m = affine_map(pts, alpha, beta);
    if (symbol(ITerm{m[0], {m[1], m[2], m[3], m[4]}, m[5]}) == s) ++ok;
  }
  return {ok == 10, std::to_string(ok) + "/10 maps leave the symbol unchanged (" + std::to_string(s.size()) +
                        " terms)"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "six-point identity, symbolic (chain and rho)", [] { return verify_target(VerifyTarget::theorem3, false); }},
      {2, "six-point identity, 20 random specializations and (0,1,3,7,19,31)", random_theorem3},
      {3, "delta22 of B(x,y;z) vanishes", [] { return verify_target(VerifyTarget::b_element, false); }},
      {4, "antisymmetry of [x,y]31", [] { return verify_target(VerifyTarget::antisym31, false); }},
      {5, "five-term relation (exact and numeric)", [] { return verify_target(VerifyTarget::fiveterm, false); }},
      {6, "ker rho = span of shuffles", kernel_oracle},
      {7, "convention pinning (li_n, Bloch-Wigner)", convention_pinning},
      {8, "weight-two determinant check for D=-4, -3", zagier_n2},
      {9, "affine invariance of the symbol", affine_invariance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("criterion %d: %s  %s  [%s] (%.2f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
