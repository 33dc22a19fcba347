#include "zagier/hyperlog/symbol.hpp"

#include <array>
#include <mutex>
#include <shared_mutex>

#include <omp.h>

#include "zagier/errors.hpp"

namespace zagier {
namespace {

struct PointPairHash {
  std::size_t operator()(const std::pair<PPoint, PPoint>& p) const noexcept {
    return p.first.hash() * 0x100000001b3ULL ^ p.second.hash();
  }
};

class DifferenceLogCache {
 public:
  static DifferenceLogCache& global() {
    static DifferenceLogCache cache;
    return cache;
  }

  MultElement get(const PPoint& a, const PPoint& b) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = map_.find({a, b}); it != map_.end()) return it->second.canonical();
    }
    MultElement value;
    if (auto d = difference(a, b); d && !d->is_zero()) value = d->log();
    std::unique_lock lock(mutex_);
    map_.emplace(std::make_pair(a, b), value);
    map_.emplace(std::make_pair(b, a), value);
    return value;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::pair<PPoint, PPoint>, MultElement, PointPairHash> map_;
};

// Permutations of slot positions with signs making up ρ on weight n.
const std::vector<std::pair<std::vector<unsigned>, int>>& rho_pattern(unsigned n) {
  static std::array<std::vector<std::pair<std::vector<unsigned>, int>>, kMaxTensorWeight + 1> patterns;
  static std::once_flag once;
  std::call_once(once, [] {
    patterns[1] = {{{0}, 1}};
    for (unsigned w = 2; w <= kMaxTensorWeight; ++w) {
      // ρ(x1..xw) = ρ(x1..xw−1)⊗xw − ρ(x2..xw)⊗x1
      for (const auto& [perm, sign] : patterns[w - 1]) {
        std::vector<unsigned> p = perm;
        p.push_back(w - 1);
        patterns[w].emplace_back(std::move(p), sign);
      }
      for (const auto& [perm, sign] : patterns[w - 1]) {
        std::vector<unsigned> p;
        for (unsigned s : perm) p.push_back(s + 1);
        p.push_back(0);
        patterns[w].emplace_back(std::move(p), -sign);
      }
    }
  });
  return patterns[n];
}

}  // namespace

MultElement log_difference(const PPoint& a, const PPoint& b) { return DifferenceLogCache::global().get(a, b); }

MultElement weight_one_log(const ITerm& t) {
  if (t.weight() != 1) throw std::invalid_argument("weight_one_log: weight " + std::to_string(t.weight()));
  return log_difference(t.end, t.word[0]) - log_difference(t.a0, t.word[0]);
}

TensorElement symbol(const ITerm& t, bool regularized) {
  const unsigned n = t.weight();
  if (n == 0) return TensorElement::unit();
  if (n > kMaxTensorWeight) throw std::length_error("symbol: weight exceeds kMaxTensorWeight");
  if (t.a0 == t.end) return TensorElement(n);
  if (!regularized && !t.convergent()) throw DivergentTerm("divergent iterated integral " + t.str());

  std::vector<const PPoint*> pts;
  pts.push_back(&t.a0);
  for (const auto& p : t.word) pts.push_back(&p);
  pts.push_back(&t.end);

  std::vector<TensorElement> S(std::size_t{1} << n);
  S[0] = TensorElement::unit();
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    TensorAccumulator acc(static_cast<unsigned>(__builtin_popcount(mask)));
    for (unsigned bit = 0; bit < n; ++bit) {
      if (!(mask & (1U << bit))) continue;
      const TensorElement& prefix = S[mask & ~(1U << bit)];
      if (prefix.empty()) continue;
      unsigned prev = 0;
      for (int b = static_cast<int>(bit) - 1; b >= 0; --b)
        if (mask & (1U << b)) {
          prev = static_cast<unsigned>(b) + 1;
          break;
        }
      unsigned next = n + 1;
      for (unsigned b = bit + 1; b < n; ++b)
        if (mask & (1U << b)) {
          next = b + 1;
          break;
        }
      const PPoint& ai = *pts[bit + 1];
      const MultElement entry = log_difference(ai, *pts[next]) - log_difference(ai, *pts[prev]);
      if (entry.is_identity()) continue;
      acc.add(prefix.tensor(TensorElement::from_mult(entry)));
    }
    S[mask] = acc.take();
  }
  return S.back();
}

void prepare_logs(const IComb& c) {
  for (const auto& [t, coef] : c.terms()) {
    std::vector<const PPoint*> pts;
    pts.push_back(&t.a0);
    for (const auto& p : t.word) pts.push_back(&p);
    pts.push_back(&t.end);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) log_difference(*pts[i], *pts[j]);
  }
}

TensorElement symbol_serial(const IComb& c, bool regularized) {
  TensorAccumulator acc(c.weight());
  for (const auto& [t, coef] : c.terms()) acc.add(symbol(t, regularized), coef);
  return acc.take();
}

TensorElement symbol(const IComb& c, bool regularized) {
  prepare_logs(c);
  const auto& terms = c.terms();
  const auto n = static_cast<std::ptrdiff_t>(terms.size());
  TensorAccumulator total(c.weight());
  std::exception_ptr error;
#pragma omp parallel
  {
    TensorAccumulator local(c.weight());
#pragma omp for schedule(dynamic, 1) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        local.add(symbol(terms[i].first, regularized), terms[i].second);
      } catch (...) {
#pragma omp critical(zagier_symbol_error)
        if (!error) error = std::current_exception();
      }
    }
#pragma omp critical(zagier_symbol_merge)
    total.merge(std::move(local));
  }
  if (error) std::rethrow_exception(error);
  return total.take();
}

TensorElement rho_project(const TensorElement& s) {
  const unsigned n = s.weight();
  if (n <= 1 || s.empty()) return s;
  const auto& pattern = rho_pattern(n);
  TensorAccumulator acc(n);
  const TensorElement canon = s.canonical();
  for (const auto& [key, c] : canon.terms()) {
    const BigRational neg = -c;
    for (const auto& [perm, sign] : pattern) {
      TensorKey k = empty_key();
      for (unsigned i = 0; i < n; ++i) k[i] = key[perm[i]];
      acc.add(k, sign > 0 ? c : neg);
    }
  }
  return acc.take();
}

}  // namespace zagier
