#include "zagier/mult/tensor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace zagier {
namespace {

void normalize(std::vector<TensorTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const TensorTerm& a, const TensorTerm& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    BigRational c = std::move(terms[i].second);
    while (j < terms.size() && terms[j].first == terms[i].first) c += terms[j++].second;
    if (!c.is_zero()) {
      terms[out].first = terms[i].first;
      terms[out].second = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Sorted merge of two normalized term lists, b scaled.
std::vector<TensorTerm> merge_terms(const std::vector<TensorTerm>& a, const std::vector<TensorTerm>& b,
                                    const BigRational& scale_b) {
  std::vector<TensorTerm> out;
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
      BigRational c = a[i].second + b[j].second * scale_b;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

bool orient_wedge(TensorKey& k, BigRational& c) {
  if (k[0] == k[1]) return false;
  if (k[1] < k[0]) {
    std::swap(k[0], k[1]);
    c = -c;
  }
  return true;
}

// Rewrites every retired atom in terms of its active factors, expanding
// multilinearly slot by slot. Returns nullopt when no term is affected.
std::optional<std::vector<TensorTerm>> expand_retired(const std::vector<TensorTerm>& terms, unsigned weight) {
  auto& reg = AtomRegistry::global();
  std::map<AtomId, std::optional<AtomExponents>> split;
  for (const auto& [k, c] : terms)
    for (unsigned s = 0; s < weight; ++s)
      if (!split.contains(k[s])) {
        if (reg.retired(k[s]))
          split.emplace(k[s], reg.resolve(AtomExponents{{k[s], 1}}));
        else
          split.emplace(k[s], std::nullopt);
      }
  const bool any = std::any_of(split.begin(), split.end(), [](const auto& kv) { return kv.second.has_value(); });
  if (!any) return std::nullopt;
  std::vector<TensorTerm> out;
  for (const auto& term : terms) {
    std::vector<TensorTerm> partial{term};
    for (unsigned s = 0; s < weight; ++s) {
      const auto& parts = split.at(term.first[s]);
      if (!parts) continue;
      std::vector<TensorTerm> next;
      for (const auto& [k, c] : partial)
        for (const auto& [atom, e] : *parts) {
          TensorKey nk = k;
          nk[s] = atom;
          next.emplace_back(nk, c * BigRational(e));
        }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return out;
}

std::vector<RenderedTerm> render_rows(const std::vector<TensorTerm>& terms, unsigned weight, bool wedge,
                                      std::size_t limit) {
  auto& reg = AtomRegistry::global();
  std::vector<AtomId> atoms;
  for (const auto& [k, c] : terms)
    for (unsigned s = 0; s < weight; ++s) atoms.push_back(k[s]);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  std::vector<MultiPoly> polys;
  polys.reserve(atoms.size());
  for (AtomId a : atoms) polys.push_back(reg.atom(a));
  std::vector<std::size_t> order(atoms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return poly_less(polys[a], polys[b]); });
  std::unordered_map<AtomId, AtomId> rank;
  for (std::size_t r = 0; r < order.size(); ++r) rank.emplace(atoms[order[r]], static_cast<AtomId>(r));

  std::vector<TensorTerm> ranked;
  ranked.reserve(terms.size());
  for (const auto& [k, c] : terms) {
    TensorKey rk = empty_key();
    for (unsigned s = 0; s < weight; ++s) rk[s] = rank.at(k[s]);
    BigRational rc = c;
    if (wedge) orient_wedge(rk, rc);
    ranked.emplace_back(rk, std::move(rc));
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<RenderedTerm> out;
  for (std::size_t i = 0; i < ranked.size() && i < limit; ++i) {
    const auto& [rk, c] = ranked[i];
    RenderedTerm r{c, {}};
    for (unsigned slot = 0; slot < weight; ++slot) r.atoms.push_back(reg.render(atoms[order[rk[slot]]]));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> render_terms(const std::vector<TensorTerm>& terms, unsigned weight, bool wedge,
                                      std::size_t limit) {
  std::vector<std::string> out;
  for (const auto& r : render_rows(terms, weight, wedge, limit)) {
    std::string s = r.coef.str();
    for (std::size_t slot = 0; slot < r.atoms.size(); ++slot) {
      s += slot == 0 ? " * " : (wedge && slot == 1 ? " ∧ " : " ⊗ ");
      s += r.atoms[slot];
    }
    if (weight == 0) s += " * 1";
    out.push_back(std::move(s));
  }
  return out;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += "\n";
    out += t;
  }
  return out;
}

void check_weight(unsigned w) {
  if (w > kMaxTensorWeight) throw std::length_error("tensor weight exceeds kMaxTensorWeight");
}

}  // namespace

// TensorElement

TensorElement::TensorElement(unsigned weight) : weight_(weight), generation_(AtomRegistry::global().generation()) {
  check_weight(weight);
}

TensorElement TensorElement::unit() {
  TensorElement t(0);
  t.terms_.emplace_back(empty_key(), BigRational(1));
  return t;
}

TensorElement TensorElement::from_mult(const MultElement& m) {
  TensorElement t(1);
  const MultElement c = m.canonical();
  for (const auto& [id, e] : c.entries()) {
    TensorKey k = empty_key();
    k[0] = id;
    t.terms_.emplace_back(k, e);
  }
  return t;
}

TensorElement TensorElement::from_terms(unsigned weight, std::vector<TensorTerm> terms) {
  TensorElement t(weight);
  normalize(terms);
  t.terms_ = std::move(terms);
  return t.canonical();
}

TensorElement TensorElement::canonical() const {
  const std::size_t gen = AtomRegistry::global().generation();
  if (gen == generation_ || terms_.empty()) return *this;
  TensorElement out(weight_);
  out.generation_ = gen;
  if (auto expanded = expand_retired(terms_, weight_)) {
    normalize(*expanded);
    out.terms_ = std::move(*expanded);
  } else {
    out.terms_ = terms_;
  }
  return out;
}

TensorElement TensorElement::tensor(const TensorElement& rhs) const {
  check_weight(weight_ + rhs.weight_);
  const TensorElement a = canonical();
  const TensorElement b = rhs.canonical();
  TensorElement out(weight_ + rhs.weight_);
  out.generation_ = std::min(a.generation_, b.generation_);
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  // Concatenating keys of two sorted lists yields a sorted list.
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      TensorKey k = ka;
      for (unsigned s = 0; s < b.weight_; ++s) k[weight_ + s] = kb[s];
      out.terms_.emplace_back(k, ca * cb);
    }
  return out;
}

TensorElement TensorElement::scaled(const BigRational& c) const {
  if (c.is_zero()) return TensorElement(weight_);
  TensorElement out = canonical();
  for (auto& [k, v] : out.terms_) v *= c;
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  if (rhs.weight_ != weight_ && !rhs.empty() && !empty()) throw std::invalid_argument("adding tensors of different weight");
  if (empty()) weight_ = rhs.weight_;
  const TensorElement a = canonical();
  const TensorElement b = rhs.canonical();
  terms_ = merge_terms(a.terms_, b.terms_, BigRational(1));
  generation_ = std::min(a.generation_, b.generation_);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs) {
  if (rhs.weight_ != weight_ && !rhs.empty() && !empty()) throw std::invalid_argument("adding tensors of different weight");
  if (empty()) weight_ = rhs.weight_;
  const TensorElement a = canonical();
  const TensorElement b = rhs.canonical();
  terms_ = merge_terms(a.terms_, b.terms_, BigRational(-1));
  generation_ = std::min(a.generation_, b.generation_);
  return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  const auto ca = a.canonical();
  const auto cb = b.canonical();
  if (ca.terms_.empty() && cb.terms_.empty()) return true;
  return ca.weight_ == cb.weight_ && ca.terms_ == cb.terms_;
}

std::vector<RenderedTerm> TensorElement::rendered() const {
  const auto c = canonical();
  return render_rows(c.terms_, weight_, false, c.terms_.size());
}

std::string TensorElement::str() const {
  const auto c = canonical();
  return join_terms(render_terms(c.terms_, weight_, false, c.terms_.size()));
}

// TensorAccumulator

void TensorAccumulator::add(const TensorKey& key, const BigRational& c) {
  if (c.is_zero()) return;
  if (generation_ == std::numeric_limits<std::size_t>::max()) generation_ = AtomRegistry::global().generation();
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) it->second += c;
}

void TensorAccumulator::add(const TensorElement& t, const BigRational& scale) {
  if (t.empty() || scale.is_zero()) return;
  const TensorElement c = t.canonical();
  if (c.weight_ != weight_) throw std::invalid_argument("accumulating tensor of different weight");
  generation_ = std::min(generation_, c.generation_);
  for (const auto& [k, v] : c.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, v * scale);
    if (!inserted) it->second += v * scale;
  }
}

void TensorAccumulator::merge(TensorAccumulator&& other) {
  if (terms_.size() < other.terms_.size()) std::swap(terms_, other.terms_);
  generation_ = std::min(generation_, other.generation_);
  for (auto& [k, v] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, std::move(v));
    if (!inserted) it->second += v;
  }
  other.terms_.clear();
}

TensorElement TensorAccumulator::take() {
  TensorElement out(weight_);
  out.terms_.reserve(terms_.size());
  for (auto& [k, v] : terms_)
    if (!v.is_zero()) out.terms_.emplace_back(k, std::move(v));
  terms_.clear();
  std::sort(out.terms_.begin(), out.terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (generation_ != std::numeric_limits<std::size_t>::max()) out.generation_ = generation_;
  generation_ = std::numeric_limits<std::size_t>::max();
  return out.canonical();
}

TensorElement tensor_combine(std::span<const TensorElement> parts) {
  TensorElement out = TensorElement::unit();
  for (const auto& p : parts) out = out.tensor(p);
  return out;
}

TensorElement shuffle_tensor(const TensorElement& a, const TensorElement& b) {
  const unsigned wa = a.weight();
  const unsigned wb = b.weight();
  check_weight(wa + wb);
  // Positions taken by the first factor, one mask per interleaving.
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1U << (wa + wb)); ++m)
    if (static_cast<unsigned>(__builtin_popcount(m)) == wa) masks.push_back(m);
  TensorAccumulator acc(wa + wb);
  const TensorElement ca_all = a.canonical();
  const TensorElement cb_all = b.canonical();
  for (const auto& [ka, ca] : ca_all.terms())
    for (const auto& [kb, cb] : cb_all.terms()) {
      const BigRational c = ca * cb;
      for (unsigned m : masks) {
        TensorKey k = empty_key();
        unsigned ia = 0;
        unsigned ib = 0;
        for (unsigned s = 0; s < wa + wb; ++s) k[s] = (m & (1U << s)) ? ka[ia++] : kb[ib++];
        acc.add(k, c);
      }
    }
  return acc.take();
}

// WedgeTensor

WedgeTensor::WedgeTensor(unsigned weight) : weight_(weight), generation_(AtomRegistry::global().generation()) {
  check_weight(weight);
  if (weight < 2) throw std::invalid_argument("wedge tensor needs weight >= 2");
}

WedgeTensor WedgeTensor::from_tensor(const TensorElement& t) {
  const TensorElement c = t.canonical();
  WedgeTensor out(c.weight() < 2 ? 2 : c.weight());
  if (c.empty()) return out;
  if (c.weight() < 2) throw std::invalid_argument("wedge of a tensor of weight < 2");
  std::vector<TensorTerm> terms;
  terms.reserve(c.size());
  for (const auto& [k, v] : c.terms()) {
    TensorKey nk = k;
    BigRational nv = v;
    if (orient_wedge(nk, nv)) terms.emplace_back(nk, std::move(nv));
  }
  normalize(terms);
  out.terms_ = std::move(terms);
  return out;
}

WedgeTensor WedgeTensor::canonical() const {
  const std::size_t gen = AtomRegistry::global().generation();
  if (gen == generation_ || terms_.empty()) return *this;
  WedgeTensor out(weight_);
  out.generation_ = gen;
  if (auto expanded = expand_retired(terms_, weight_)) {
    std::vector<TensorTerm> terms;
    for (auto& [k, v] : *expanded)
      if (orient_wedge(k, v)) terms.emplace_back(k, std::move(v));
    normalize(terms);
    out.terms_ = std::move(terms);
  } else {
    out.terms_ = terms_;
  }
  return out;
}

TensorElement WedgeTensor::to_tensor() const {
  const WedgeTensor c = canonical();
  std::vector<TensorTerm> terms;
  terms.reserve(2 * c.terms_.size());
  for (const auto& [k, v] : c.terms_) {
    terms.emplace_back(k, v);
    TensorKey sk = k;
    std::swap(sk[0], sk[1]);
    terms.emplace_back(sk, -v);
  }
  return TensorElement::from_terms(weight_, std::move(terms));
}

WedgeTensor WedgeTensor::scaled(const BigRational& c) const {
  if (c.is_zero()) return WedgeTensor(weight_);
  WedgeTensor out = canonical();
  for (auto& [k, v] : out.terms_) v *= c;
  return out;
}

WedgeTensor WedgeTensor::tensor(const TensorElement& rhs) const {
  check_weight(weight_ + rhs.weight());
  const WedgeTensor a = canonical();
  const TensorElement b = rhs.canonical();
  WedgeTensor out(weight_ + rhs.weight());
  out.generation_ = a.generation_;
  out.terms_.reserve(a.terms_.size() * b.size());
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms()) {
      TensorKey k = ka;
      for (unsigned s = 0; s < rhs.weight(); ++s) k[weight_ + s] = kb[s];
      out.terms_.emplace_back(k, ca * cb);
    }
  return out.canonical();
}

WedgeTensor& WedgeTensor::operator+=(const WedgeTensor& rhs) {
  if (terms_.empty()) weight_ = rhs.weight_;
  if (rhs.weight_ != weight_ && !rhs.terms_.empty()) throw std::invalid_argument("adding wedge tensors of different weight");
  const WedgeTensor a = canonical();
  const WedgeTensor b = rhs.canonical();
  terms_ = merge_terms(a.terms_, b.terms_, BigRational(1));
  generation_ = std::min(a.generation_, b.generation_);
  return *this;
}

WedgeTensor& WedgeTensor::operator-=(const WedgeTensor& rhs) {
  if (terms_.empty()) weight_ = rhs.weight_;
  if (rhs.weight_ != weight_ && !rhs.terms_.empty()) throw std::invalid_argument("adding wedge tensors of different weight");
  const WedgeTensor a = canonical();
  const WedgeTensor b = rhs.canonical();
  terms_ = merge_terms(a.terms_, b.terms_, BigRational(-1));
  generation_ = std::min(a.generation_, b.generation_);
  return *this;
}

bool operator==(const WedgeTensor& a, const WedgeTensor& b) {
  const auto ca = a.canonical();
  const auto cb = b.canonical();
  if (ca.terms_.empty() && cb.terms_.empty()) return true;
  return ca.weight_ == cb.weight_ && ca.terms_ == cb.terms_;
}

std::string WedgeTensor::str() const {
  const auto c = canonical();
  return join_terms(render_terms(c.terms_, weight_, true, c.terms_.size()));
}

WedgeChainElement wedge_chain(const TensorElement& first, const TensorElement& rest) {
  if (!first.empty() && first.weight() != 2) throw std::invalid_argument("wedge_chain: first factor must have weight 2");
  if (!rest.empty() && rest.weight() != 2) throw std::invalid_argument("wedge_chain: rest must have weight 2");
  if (first.empty() || rest.empty()) return WedgeChainElement(4);
  return WedgeTensor::from_tensor(first.tensor(rest));
}

WedgeTensor wedge(const MultElement& a, const MultElement& b) {
  return WedgeTensor::from_tensor(TensorElement::from_mult(a).tensor(TensorElement::from_mult(b)));
}

ZeroCheck is_zero(const TensorElement& t, std::size_t sample_limit) {
  const auto c = t.canonical();
  ZeroCheck out;
  out.residual_count = c.size();
  out.zero = out.residual_count == 0;
  out.sample = render_terms(c.terms(), c.weight(), false, sample_limit);
  return out;
}

ZeroCheck is_zero(const WedgeTensor& t, std::size_t sample_limit) {
  const auto c = t.canonical();
  ZeroCheck out;
  out.residual_count = c.size();
  out.zero = out.residual_count == 0;
  out.sample = render_terms(c.terms(), c.weight(), true, sample_limit);
  return out;
}

}  // namespace zagier
