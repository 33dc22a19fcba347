#include "zagier/exact/poly_gcd.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zagier {
namespace {

// --- arithmetic modulo the Mersenne prime 2^61 - 1 ---------------------------

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1U) r = mod_mul(r, b);
    b = mod_mul(b, b);
    e >>= 1U;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }

std::uint64_t reduce(const BigRational& c) {
  // integer coefficients only
  const mpz_class n = c.numerator();
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), kPrime);
  return r.get_ui();
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

using UPoly = std::vector<std::uint64_t>;  // index = power

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = mod_inv(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t f = mod_mul(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = mod_sub(a[i + shift], mod_mul(f, b[i]));
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

UPoly univariate_image(const MultiPoly& p, VarId v, const std::array<std::uint64_t, kMaxVars>& point) {
  UPoly out(p.degree(v) + 1, 0);
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t val = reduce(c);
    for (std::size_t u = 0; u < kMaxVars; ++u) {
      if (u == v || m.exp[u] == 0) continue;
      val = mod_mul(val, mod_pow(point[u], m.exp[u]));
    }
    out[m.exp[v]] = mod_add(out[m.exp[v]], val);
  }
  return out;
}

// --- integer helpers ----------------------------------------------------------

mpz_class int_content(const MultiPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    const mpz_class n = t.second.numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  return g;
}

mpz_class max_norm(const MultiPoly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) {
    mpz_class n = t.second.numerator();
    n = abs(n);
    if (n > m) m = n;
  }
  return m;
}

MultiPoly sign_normalized(const MultiPoly& p) {
  if (!p.is_zero() && p.leading_coefficient().sign() < 0) return -p;
  return p;
}

// xi-adic reconstruction: coefficients of gamma are expanded in base xi with
// symmetric digits; digit i becomes the coefficient of x^i.
MultiPoly genpoly(const MultiPoly& gamma, const mpz_class& xi, VarId x) {
  std::vector<MultiPoly::Term> out;
  const mpz_class half = xi / 2;
  for (const auto& [m, c] : gamma.terms()) {
    mpz_class e = c.numerator();
    unsigned i = 0;
    while (e != 0) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), e.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) {
        Monomial mm = m;
        if (i > 255) throw std::overflow_error("genpoly: degree overflow");
        mm.exp[x] = static_cast<std::uint8_t>(i);
        mm.degree = static_cast<std::uint16_t>(m.degree + i);
        out.emplace_back(mm, BigRational(r));
      }
      e = (e - r) / xi;
      ++i;
    }
  }
  return MultiPoly::from_terms(std::move(out));
}

std::optional<MultiPoly> heuristic_rec(const MultiPoly& a, const MultiPoly& b) {
  const mpz_class ca = int_content(a);
  const mpz_class cb = int_content(b);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return MultiPoly(BigRational(g));
  const MultiPoly pa = a.scaled(BigRational(mpz_class(1), ca));
  const MultiPoly pb = b.scaled(BigRational(mpz_class(1), cb));
  const std::uint32_t common = pa.support() & pb.support();
  if (common == 0) return MultiPoly(BigRational(g));
  const auto x = static_cast<VarId>(std::countr_zero(common));
  const unsigned max_deg = std::max(pa.degree(x), pb.degree(x));

  mpz_class xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * max_deg > 400000) return std::nullopt;
    const BigRational xq(xi);
    const MultiPoly ea = pa.eval_var(x, xq);
    const MultiPoly eb = pb.eval_var(x, xq);
    if (!ea.is_zero() && !eb.is_zero()) {
      if (auto gamma = heuristic_rec(ea, eb)) {
        MultiPoly cand = genpoly(*gamma, xi, x).normalized();
        if (!cand.is_zero() && pa.divide_exact(cand) && pb.divide_exact(cand)) {
          return cand.scaled(BigRational(g));
        }
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// --- primitive PRS ------------------------------------------------------------

MultiPoly prs_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_in(const MultiPoly& p, VarId x) {
  MultiPoly c;
  for (const auto& [e, coeff] : p.coefficients_in(x)) {
    c = c.is_zero() ? sign_normalized(coeff) : prs_rec(c, coeff);
    if (c.is_constant() && c.constant_value().is_one()) break;
  }
  return c;
}

MultiPoly primitive_in(const MultiPoly& p, VarId x) {
  const MultiPoly c = content_in(p, x);
  auto q = p.divide_exact(c);
  if (!q) throw std::logic_error("gcd_prs: content does not divide");
  return sign_normalized(*q);
}

MultiPoly lc_in(const MultiPoly& p, VarId x) {
  auto coeffs = p.coefficients_in(x);
  return coeffs.rbegin()->second;
}

MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, VarId x) {
  const unsigned dg = g.degree(x);
  const MultiPoly lcg = lc_in(g, x);
  MultiPoly r = f;
  while (!r.is_zero() && r.degree(x) >= dg) {
    const unsigned dr = r.degree(x);
    const MultiPoly lcr = lc_in(r, x);
    r = r * lcg - g * lcr.mul_term(Monomial::var(x, dr - dg), BigRational(1));
  }
  return r;
}

MultiPoly prs_rec(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return sign_normalized(b);
  if (b.is_zero()) return sign_normalized(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class g;
    const mpz_class ca = int_content(a);
    const mpz_class cb = int_content(b);
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return MultiPoly(BigRational(g));
  }
  const std::uint32_t sup = a.support() | b.support();
  const auto x = static_cast<VarId>(31 - std::countl_zero(sup));
  if (a.degree(x) == 0) return prs_rec(a, content_in(b, x));
  if (b.degree(x) == 0) return prs_rec(content_in(a, x), b);

  const MultiPoly ca = content_in(a, x);
  const MultiPoly cb = content_in(b, x);
  const MultiPoly c = prs_rec(ca, cb);
  MultiPoly r0 = *a.divide_exact(ca);
  MultiPoly r1 = *b.divide_exact(cb);
  if (r0.degree(x) < r1.degree(x)) std::swap(r0, r1);
  for (;;) {
    MultiPoly r = pseudo_remainder(r0, r1, x);
    if (r.is_zero()) break;
    if (r.degree(x) == 0) {
      r1 = MultiPoly(1);
      break;
    }
    r0 = std::move(r1);
    r1 = primitive_in(r, x);
  }
  const MultiPoly g = r1.is_constant() ? MultiPoly(1) : primitive_in(r1, x);
  return sign_normalized(c * g);
}

}  // namespace

PrimitiveSplit primitive_split(const MultiPoly& p) {
  if (p.is_zero()) return {BigRational(0), MultiPoly()};
  BigRational c = p.content();
  if (p.leading_coefficient().sign() < 0) c = -c;
  return {c, p.scaled(c.inverse())};
}

namespace gcd_detail {

bool certify_coprime(const MultiPoly& a, const MultiPoly& b) {
  const std::uint32_t common = a.support() & b.support();
  if (common == 0) return true;
  for (unsigned v = 0; v < kMaxVars; ++v) {
    if (!(common & (1U << v))) continue;
    const auto var = static_cast<VarId>(v);
    const unsigned da = a.degree(var);
    const unsigned db = b.degree(var);
    bool cleared = false;
    for (std::uint64_t attempt = 0; attempt < 3 && !cleared; ++attempt) {
      std::array<std::uint64_t, kMaxVars> point{};
      for (std::size_t u = 0; u < kMaxVars; ++u) point[u] = splitmix((attempt << 8U) ^ (v << 4U) ^ u) % kPrime;
      UPoly ua = univariate_image(a, var, point);
      UPoly ub = univariate_image(b, var, point);
      // A common factor with positive degree in v keeps its full degree in
      // the image whenever one input keeps its leading coefficient.
      const bool full_a = ua.size() == da + 1 && ua.back() != 0;
      const bool full_b = ub.size() == db + 1 && ub.back() != 0;
      if (!full_a && !full_b) continue;
      const UPoly g = upoly_gcd(ua, ub);
      if (g.size() <= 1) {
        cleared = true;
      } else {
        return false;
      }
    }
    if (!cleared) return false;
  }
  return true;
}

std::optional<MultiPoly> gcd_heuristic(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return sign_normalized(a.is_zero() ? b : a);
  return heuristic_rec(a, b);
}

MultiPoly gcd_prs(const MultiPoly& a, const MultiPoly& b) { return prs_rec(a, b); }

}  // namespace gcd_detail

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("poly_gcd: both arguments are zero");
  if (p.is_zero()) return q.is_constant() ? MultiPoly(1) : q.normalized();
  if (q.is_zero()) return p.is_constant() ? MultiPoly(1) : p.normalized();
  if (p.is_constant() || q.is_constant()) return MultiPoly(1);
  const MultiPoly a = primitive_split(p).primitive;
  const MultiPoly b = primitive_split(q).primitive;
  if (a == b) return a;
  if (gcd_detail::certify_coprime(a, b)) return MultiPoly(1);
  if (auto g = gcd_detail::gcd_heuristic(a, b)) return g->is_constant() ? MultiPoly(1) : g->normalized();
  MultiPoly g = gcd_detail::gcd_prs(a, b);
  return g.is_constant() ? MultiPoly(1) : g.normalized();
}

}  // namespace zagier
