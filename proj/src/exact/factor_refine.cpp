#include "zagier/exact/factor_refine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "zagier/exact/poly_gcd.hpp"

namespace zagier {
namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kLimit = 1U << 14U;
    std::vector<bool> sieve(kLimit, true);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i < kLimit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < kLimit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

// Divides out factors of the shapes v, v - 1, v + 1 and v - w. Expressions
// built from point configurations are mostly products of these, and peeling
// them first keeps the atoms at the level of single differences.
std::vector<std::pair<MultiPoly, long>> peel_simple_factors(MultiPoly& x) {
  std::vector<std::pair<MultiPoly, long>> out;
  if (x.total_degree() <= 1) return out;
  std::vector<VarId> vars;
  for (unsigned v = 0; v < kMaxVars; ++v)
    if (x.support() & (1U << v)) vars.push_back(static_cast<VarId>(v));
  std::vector<MultiPoly> candidates;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const MultiPoly vi = MultiPoly::variable(vars[i]);
    candidates.push_back(vi);
    candidates.push_back(vi - 1);
    candidates.push_back(vi + 1);
    for (std::size_t j = i + 1; j < vars.size(); ++j) candidates.push_back((vi - MultiPoly::variable(vars[j])).normalized());
  }
  for (const auto& c : candidates) {
    if (x.total_degree() <= 1) break;
    if ((c.support() & x.support()) != c.support()) continue;
    long e = 0;
    while (x.total_degree() > 1) {
      auto q = x.divide_exact(c);
      if (!q) break;
      x = q->normalized();
      ++e;
    }
    if (e > 0) out.emplace_back(c, e);
  }
  return out;
}

}  // namespace

AtomExponents add_exponents(const AtomExponents& a, const AtomExponents& b, long scale_b) {
  AtomExponents out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, b[j].second * scale_b);
      ++j;
    } else {
      const long e = a[i].second + b[j].second * scale_b;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<CoprimeBasis::Index> CoprimeBasis::active() const {
  std::vector<Index> out;
  for (Index i = 0; i < atoms_.size(); ++i)
    if (!split_[i]) out.push_back(i);
  return out;
}

CoprimeBasis::Index CoprimeBasis::add_atom(MultiPoly p) {
  const auto idx = static_cast<Index>(atoms_.size());
  index_.emplace(p, idx);
  atoms_.push_back(std::move(p));
  split_.emplace_back();
  return idx;
}

void CoprimeBasis::retire(Index i, AtomExponents parts) {
  split_[i] = std::move(parts);
  ++retired_count_;
}

AtomExponents CoprimeBasis::resolve(const AtomExponents& e) const {
  bool clean = std::none_of(e.begin(), e.end(), [this](const auto& t) { return split_[t.first].has_value(); });
  if (clean) return e;
  AtomExponents out;
  for (const auto& [i, k] : e) {
    if (split_[i]) {
      out = add_exponents(out, resolve(*split_[i]), k);
    } else {
      out = add_exponents(out, AtomExponents{{i, k}});
    }
  }
  return out;
}

AtomExponents CoprimeBasis::insert(const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("CoprimeBasis::insert: zero has no decomposition");
  if (auto it = cache_.find(p); it != cache_.end()) return resolve(it->second);
  const PrimitiveSplit split = primitive_split(p);
  const BigRational& c = split.factor;
  mpz_class num = c.numerator();
  num = abs(num);
  AtomExponents e = add_exponents(insert_integer(num), insert_integer(c.denominator()), -1);
  if (!split.primitive.is_constant()) {
    MultiPoly rest = split.primitive;
    for (const auto& [f, k] : peel_simple_factors(rest)) e = add_exponents(e, insert_primitive(f), k);
    if (!rest.is_constant()) e = add_exponents(e, insert_primitive(rest));
  }
  e = resolve(e);
  cache_.emplace(p, e);
  return e;
}

AtomExponents CoprimeBasis::insert_integer(mpz_class n) {
  AtomExponents out;
  if (n <= 1) return out;
  for (unsigned long p : small_primes()) {
    if (n == 1) break;
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    long k = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++k;
    }
    MultiPoly atom{BigRational(static_cast<long>(p))};
    auto it = index_.find(atom);
    const Index idx = it != index_.end() ? it->second : add_atom(std::move(atom));
    out = add_exponents(out, AtomExponents{{idx, k}});
  }
  if (n > 1) out = add_exponents(out, insert_big_integer(n));
  return out;
}

AtomExponents CoprimeBasis::insert_big_integer(mpz_class x) {
  AtomExponents out;
  {
    auto it = index_.find(MultiPoly(BigRational(x)));
    if (it != index_.end()) return resolve(AtomExponents{{it->second, 1}});
  }
  bool changed = true;
  while (changed && x > 1) {
    changed = false;
    for (std::size_t k = 0; k < active_big_ints_.size(); ++k) {
      const Index b = active_big_ints_[k];
      const mpz_class bv = atoms_[b].constant_value().numerator();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), bv.get_mpz_t());
      if (g == 1) continue;
      if (g == bv) {
        long e = 0;
        while (mpz_divisible_p(x.get_mpz_t(), bv.get_mpz_t())) {
          mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), bv.get_mpz_t());
          ++e;
        }
        out = add_exponents(out, AtomExponents{{b, e}});
        if (x == 1) break;
        continue;
      }
      active_big_ints_.erase(active_big_ints_.begin() + static_cast<std::ptrdiff_t>(k));
      AtomExponents parts = add_exponents(insert_big_integer(g), insert_big_integer(mpz_class(bv / g)));
      retire(b, std::move(parts));
      changed = true;
      break;
    }
  }
  if (x > 1) {
    const Index idx = add_atom(MultiPoly(BigRational(x)));
    active_big_ints_.push_back(idx);
    out = add_exponents(out, AtomExponents{{idx, 1}});
  }
  return resolve(out);
}

AtomExponents CoprimeBasis::insert_primitive(MultiPoly x) {
  if (auto it = index_.find(x); it != index_.end()) return resolve(AtomExponents{{it->second, 1}});
  AtomExponents out;
  bool changed = true;
  while (changed && !x.is_constant()) {
    changed = false;
    for (std::size_t k = 0; k < active_polys_.size(); ++k) {
      const Index b = active_polys_[k];
      const MultiPoly& bp = atoms_[b];
      if ((bp.support() & x.support()) == 0) continue;
      const MultiPoly g = poly_gcd(x, bp);
      if (g.is_constant()) continue;
      if (g == bp) {
        long e = 0;
        while (auto q = x.divide_exact(bp)) {
          x = q->normalized();
          ++e;
          if (x.is_constant()) break;
        }
        out = add_exponents(out, AtomExponents{{b, e}});
        if (x.is_constant()) break;
        continue;
      }
      const MultiPoly cofactor = bp.divide_exact(g)->normalized();
      active_polys_.erase(active_polys_.begin() + static_cast<std::ptrdiff_t>(k));
      AtomExponents parts = add_exponents(insert_primitive(g), insert_primitive(cofactor));
      retire(b, std::move(parts));
      changed = true;
      break;
    }
  }
  if (!x.is_constant()) {
    const Index idx = add_atom(std::move(x));
    active_polys_.push_back(idx);
    out = add_exponents(out, AtomExponents{{idx, 1}});
  }
  return resolve(out);
}

FactorRefinement factor_refine(std::span<const MultiPoly> inputs) {
  CoprimeBasis basis;
  std::vector<AtomExponents> decomp;
  decomp.reserve(inputs.size());
  for (const auto& p : inputs) decomp.push_back(basis.insert(p));
  std::map<CoprimeBasis::Index, std::size_t> used;
  for (auto& d : decomp) {
    d = basis.resolve(d);
    for (const auto& [i, k] : d) used.emplace(i, 0);
  }
  std::vector<CoprimeBasis::Index> order;
  for (const auto& [i, unused] : used) order.push_back(i);
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return poly_less(basis.atom(a), basis.atom(b)); });
  FactorRefinement out;
  for (std::size_t col = 0; col < order.size(); ++col) {
    used[order[col]] = col;
    out.basis.push_back(basis.atom(order[col]));
  }
  for (std::size_t r = 0; r < inputs.size(); ++r) {
    std::vector<long> row(order.size(), 0);
    MultiPoly pos(1);
    MultiPoly neg(1);
    for (const auto& [i, k] : decomp[r]) {
      row[used[i]] = k;
      (k > 0 ? pos : neg) *= basis.atom(i).pow(static_cast<unsigned>(k > 0 ? k : -k));
    }
    auto unit = (inputs[r] * neg).divide_exact(pos);
    if (!unit || !unit->is_constant()) throw std::logic_error("factor_refine: reconstruction failed");
    out.units.push_back(unit->constant_value());
    out.exponents.push_back(std::move(row));
  }
  return out;
}

}  // namespace zagier
