#include "zagier/hyperlog/coproduct.hpp"

#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

#include <omp.h>

#include "zagier/errors.hpp"

namespace zagier {
namespace {

template <class V>
class TermMemo {
 public:
  template <class F>
  V get(const ITerm& t, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = map_.find(t); it != map_.end()) return it->second;
    }
    V value = compute();
    std::unique_lock lock(mutex_);
    map_.emplace(t, value);
    return value;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<ITerm, V> map_;
};

bool closed(const ITerm& t) { return !t.word.empty() && t.a0 == t.end; }

std::vector<const PPoint*> points_of(const ITerm& t) {
  std::vector<const PPoint*> pts;
  pts.reserve(t.word.size() + 2);
  pts.push_back(&t.a0);
  for (const auto& p : t.word) pts.push_back(&p);
  pts.push_back(&t.end);
  return pts;
}

ITerm sub_term(const std::vector<const PPoint*>& pts, std::size_t from, std::size_t to) {
  ITerm t{*pts[from], {}, *pts[to]};
  for (std::size_t i = from + 1; i < to; ++i) t.word.push_back(*pts[i]);
  return t;
}

CoproductExpansion multiply(const CoproductExpansion& a, const CoproductExpansion& b) {
  CoproductExpansion out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      CoproductTerm t{x.coef * y.coef, x.factors};
      for (std::size_t i = 0; i < t.factors.size(); ++i)
        t.factors[i].insert(t.factors[i].end(), y.factors[i].begin(), y.factors[i].end());
      out.push_back(std::move(t));
    }
  return out;
}

// Weak compositions c of total into shape.size() parts with c_i ≤ shape_i.
void bounded_compositions(unsigned total, std::span<const unsigned> shape, std::vector<unsigned>& cur,
                          std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == shape.size()) {
    if (total == 0) out.push_back(cur);
    return;
  }
  const unsigned cap = std::min(total, shape[cur.size()]);
  for (unsigned c = 0; c <= cap; ++c) {
    cur.push_back(c);
    bounded_compositions(total - c, shape, cur, out);
    cur.pop_back();
  }
}

TermMemo<WedgeTensor>& delta2_memo() {
  static TermMemo<WedgeTensor> memo;
  return memo;
}

TermMemo<WedgeTensor>& chain3_memo() {
  static TermMemo<WedgeTensor> memo;
  return memo;
}

// Σ δ2(X2) ⊗ log(Z) over the (2,1) part of a weight-3 term.
WedgeTensor chain3(const ITerm& t) {
  return chain3_memo().get(t, [&] {
    WedgeTensor out(3);
    for (const auto& s : delta_n1(t)) {
      const WedgeTensor d = delta2(s.left);
      if (d.size() == 0) continue;
      out += d.tensor(TensorElement::from_mult(weight_one_log(s.right))).scaled(s.coef);
    }
    return out;
  });
}

}  // namespace

CoproductExpansion coproduct_component(const ITerm& t, std::span<const unsigned> shape) {
  if (shape.empty()) throw std::invalid_argument("coproduct_component: empty shape");
  const unsigned n = t.weight();
  if (std::accumulate(shape.begin(), shape.end(), 0U) != n)
    throw std::invalid_argument("coproduct_component: shape does not sum to the weight of " + t.str());
  if (closed(t)) return {};
  if (shape.size() == 1) {
    CoproductTerm only{BigRational(1), {IProduct{}}};
    if (n > 0) only.factors[0].push_back(t);
    return {only};
  }
  const unsigned last = shape.back();
  const unsigned K = n - last;
  const auto pts = points_of(t);
  CoproductExpansion out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != K) continue;
    ITerm left{t.a0, {}, t.end};
    IProduct right;
    bool zero = false;
    std::size_t prev = 0;
    for (std::size_t i = 1; i <= n + 1 && !zero; ++i) {
      if (i <= n && !(mask & (1U << (i - 1)))) continue;
      if (i <= n) left.word.push_back(*pts[i]);
      if (i > prev + 1) {
        ITerm gap = sub_term(pts, prev, i);
        if (closed(gap)) zero = true;
        right.push_back(std::move(gap));
      }
      prev = i;
    }
    if (zero || closed(left)) continue;
    for (auto& sub : coproduct_component(left, shape.first(shape.size() - 1))) {
      sub.factors.push_back(right);
      out.push_back(std::move(sub));
    }
  }
  return out;
}

CoproductExpansion coproduct_component(const IProduct& p, std::span<const unsigned> shape) {
  if (p.empty()) {
    if (std::any_of(shape.begin(), shape.end(), [](unsigned k) { return k != 0; })) return {};
    return {CoproductTerm{BigRational(1), std::vector<IProduct>(shape.size())}};
  }
  const ITerm& head = p.front();
  const IProduct tail(p.begin() + 1, p.end());
  std::vector<std::vector<unsigned>> splits;
  std::vector<unsigned> cur;
  bounded_compositions(head.weight(), shape, cur, splits);
  CoproductExpansion out;
  for (const auto& c : splits) {
    std::vector<unsigned> rest(shape.begin(), shape.end());
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= c[i];
    const auto a = coproduct_component(head, c);
    if (a.empty()) continue;
    const auto b = coproduct_component(tail, rest);
    if (b.empty()) continue;
    for (auto& term : multiply(a, b)) out.push_back(std::move(term));
  }
  return out;
}

TensorElement symbol(const IProduct& p) {
  TensorElement out = TensorElement::unit();
  for (const auto& t : p) out = shuffle_tensor(out, symbol(t, true));
  return out;
}

TensorElement symbol_image(const CoproductExpansion& e) {
  if (e.empty()) return TensorElement(0);
  unsigned weight = 0;
  for (const auto& f : e.front().factors)
    for (const auto& t : f) weight += t.weight();
  TensorAccumulator acc(weight);
  for (const auto& term : e) {
    TensorElement s = TensorElement::unit();
    for (const auto& f : term.factors) s = s.tensor(symbol(f));
    acc.add(s, term.coef);
  }
  return acc.take();
}

std::vector<SplitTerm> delta_n1(const ITerm& t) {
  const unsigned n = t.weight();
  if (n < 3) throw std::invalid_argument("delta_n1 needs weight >= 3, got " + t.str());
  std::vector<SplitTerm> out;
  if (closed(t)) return out;
  const auto pts = points_of(t);
  auto push = [&](long c, ITerm l, ITerm r) {
    if (closed(l) || closed(r)) return;
    out.push_back({BigRational(c), std::move(l), std::move(r)});
  };
  push(-1, sub_term(pts, 1, n + 1), ITerm{*pts[0], {*pts[1]}, *pts[n + 1]});
  push(-1, sub_term(pts, 0, n), ITerm{*pts[0], {*pts[n]}, *pts[n + 1]});
  for (unsigned j = 1; j <= n; ++j) {
    ITerm l{*pts[0], {}, *pts[n + 1]};
    for (unsigned i = 1; i <= n; ++i)
      if (i != j) l.word.push_back(*pts[i]);
    push(1, std::move(l), ITerm{*pts[j - 1], {*pts[j]}, *pts[j + 1]});
  }
  return out;
}

WedgeTensor delta2(const ITerm& t) {
  if (t.weight() != 2) throw std::invalid_argument("delta2 needs weight 2, got " + t.str());
  if (closed(t)) return WedgeTensor(2);
  return delta2_memo().get(t, [&] {
    const auto pts = points_of(t);
    const MultElement L1 = weight_one_log(ITerm{*pts[0], {*pts[1]}, *pts[3]});
    const MultElement R1 = weight_one_log(ITerm{*pts[1], {*pts[2]}, *pts[3]});
    const MultElement L2 = weight_one_log(ITerm{*pts[0], {*pts[2]}, *pts[3]});
    const MultElement R2 = weight_one_log(ITerm{*pts[0], {*pts[1]}, *pts[2]});
    return wedge(R1, L1) + wedge(R2, L2);
  });
}

WedgeTensor delta2(const IComb& c) {
  WedgeTensor out(2);
  for (const auto& [t, coef] : c.terms()) out += delta2(t).scaled(coef);
  return out;
}

WedgeChainElement cobracket_chain(const ITerm& t, bool regularized) {
  if (t.weight() != 4) throw std::invalid_argument("cobracket_chain needs weight 4, got " + t.str());
  if (!regularized && !t.convergent()) throw DivergentTerm("divergent iterated integral " + t.str());
  WedgeChainElement out(4);
  for (const auto& s : delta_n1(t)) {
    const WedgeTensor c3 = chain3(s.left);
    if (c3.size() == 0) continue;
    out += c3.tensor(TensorElement::from_mult(weight_one_log(s.right))).scaled(s.coef);
  }
  return out;
}

WedgeChainElement cobracket_chain_serial(const IComb& c, bool regularized) {
  WedgeChainElement out(4);
  for (const auto& [t, coef] : c.terms()) out += cobracket_chain(t, regularized).scaled(coef);
  return out;
}

WedgeChainElement cobracket_chain(const IComb& c, bool regularized) {
  prepare_logs(c);
  const auto& terms = c.terms();
  const auto n = static_cast<std::ptrdiff_t>(terms.size());
  std::vector<WedgeChainElement> parts(static_cast<std::size_t>(n), WedgeChainElement(4));
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      parts[static_cast<std::size_t>(i)] = cobracket_chain(terms[i].first, regularized).scaled(terms[i].second);
    } catch (...) {
#pragma omp critical(zagier_chain_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  TensorAccumulator acc(4);
  for (const auto& p : parts) {
    const WedgeChainElement canon = p.canonical();
    for (const auto& [k, v] : canon.terms()) acc.add(k, v);
  }
  // Keys are already oriented, so the accumulated sum stays oriented.
  return WedgeTensor::from_tensor(acc.take());
}

std::vector<WedgePairTerm> delta22(const ITerm& t) {
  if (t.weight() != 4) throw std::invalid_argument("delta22 needs weight 4, got " + t.str());
  std::vector<WedgePairTerm> out;
  if (closed(t)) return out;
  const auto pts = points_of(t);
  for (unsigned k = 1; k <= 3; ++k) {
    ITerm left{*pts[0], {}, *pts[5]};
    for (unsigned i = 1; i <= 4; ++i)
      if (i != k && i != k + 1) left.word.push_back(*pts[i]);
    ITerm right = sub_term(pts, k - 1, k + 2);
    if (closed(left) || closed(right)) continue;
    out.push_back({BigRational(1), std::move(right), std::move(left)});
  }
  return out;
}

TensorElement delta22_pushed(const ITerm& t) {
  TensorAccumulator acc(4);
  for (const auto& w : delta22(t)) {
    const TensorElement a = delta2(w.first).to_tensor();
    const TensorElement b = delta2(w.second).to_tensor();
    if (a.empty() || b.empty()) continue;
    acc.add(a.tensor(b), w.coef);
    acc.add(b.tensor(a), -w.coef);
  }
  return acc.take();
}

TensorElement delta22_pushed(const IComb& c) {
  prepare_logs(c);
  TensorAccumulator acc(4);
  for (const auto& [t, coef] : c.terms()) acc.add(delta22_pushed(t), coef);
  return acc.take();
}

}  // namespace zagier
