#include "zagier/mult/mult_element.hpp"

#include <algorithm>

#include "zagier/errors.hpp"

namespace zagier {

MultElement MultElement::atom(AtomId id, BigRational e) {
  MultElement m;
  m.generation_ = AtomRegistry::global().generation();
  if (!e.is_zero()) m.entries_.emplace_back(id, std::move(e));
  return m.canonical();
}

MultElement MultElement::from_exponents(const AtomExponents& e) {
  MultElement m;
  m.generation_ = AtomRegistry::global().generation();
  m.entries_.reserve(e.size());
  for (const auto& [id, k] : e) m.entries_.emplace_back(id, BigRational(k));
  return m.canonical();
}

MultElement MultElement::canonical() const {
  auto& reg = AtomRegistry::global();
  const std::size_t gen = reg.generation();
  if (gen == generation_ || entries_.empty()) return *this;
  MultElement out;
  out.generation_ = gen;
  for (const auto& [id, c] : entries_) {
    if (!reg.retired(id)) {
      out = combine(out, MultElement::raw_atom(id, c, gen), BigRational(1));
      continue;
    }
    for (const auto& [part, k] : reg.resolve(AtomExponents{{id, 1}}))
      out = combine(out, MultElement::raw_atom(part, c * BigRational(k), gen), BigRational(1));
  }
  out.generation_ = gen;
  return out;
}

MultElement MultElement::raw_atom(AtomId id, BigRational c, std::size_t gen) {
  MultElement m;
  m.generation_ = gen;
  m.entries_.emplace_back(id, std::move(c));
  return m;
}

MultElement MultElement::combine(const MultElement& a, const MultElement& b, const BigRational& scale_b) {
  MultElement out;
  out.generation_ = a.entries_.empty()   ? b.generation_
                    : b.entries_.empty() ? a.generation_
                                         : std::min(a.generation_, b.generation_);
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.entries_.size() || j < b.entries_.size()) {
    if (j == b.entries_.size() || (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first)) {
      out.entries_.push_back(a.entries_[i++]);
    } else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first) {
      out.entries_.emplace_back(b.entries_[j].first, b.entries_[j].second * scale_b);
      ++j;
    } else {
      BigRational c = a.entries_[i].second + b.entries_[j].second * scale_b;
      if (!c.is_zero()) out.entries_.emplace_back(a.entries_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

MultElement& MultElement::operator+=(const MultElement& rhs) {
  *this = combine(canonical(), rhs.canonical(), BigRational(1));
  return *this;
}

MultElement& MultElement::operator-=(const MultElement& rhs) {
  *this = combine(canonical(), rhs.canonical(), BigRational(-1));
  return *this;
}

MultElement MultElement::operator-() const { return scaled(BigRational(-1)); }

MultElement MultElement::scaled(const BigRational& c) const {
  if (c.is_zero()) return MultElement{};
  MultElement out = canonical();
  for (auto& [id, e] : out.entries_) e *= c;
  return out;
}

bool operator==(const MultElement& a, const MultElement& b) {
  return a.canonical().entries_ == b.canonical().entries_;
}

std::string MultElement::str() const {
  const MultElement c = canonical();
  if (c.entries_.empty()) return "1";
  auto& reg = AtomRegistry::global();
  std::vector<Entry> sorted = c.entries_;
  std::sort(sorted.begin(), sorted.end(), [&](const Entry& x, const Entry& y) { return reg.less(x.first, y.first); });
  std::string out;
  for (const auto& [id, e] : sorted) {
    if (!out.empty()) out += " * ";
    out += reg.render(id);
    if (!e.is_one()) out += "^" + (e.is_integer() ? e.str() : "(" + e.str() + ")");
  }
  return out;
}

MultElement mult_from_poly(const MultiPoly& p) {
  if (p.is_zero()) throw DegenerateArgument("logarithm of zero");
  return MultElement::from_exponents(AtomRegistry::global().insert(p));
}

MultElement mult_from_ratio(const MultiPoly& num, const MultiPoly& den) {
  if (num.is_zero()) throw DegenerateArgument("zero numerator in " + num.str() + " / " + den.str());
  if (den.is_zero()) throw DegenerateArgument("zero denominator in " + num.str() + " / " + den.str());
  return mult_from_poly(num) - mult_from_poly(den);
}

ZeroCheck is_zero(const MultElement& e, std::size_t sample_limit) {
  const MultElement c = e.canonical();
  ZeroCheck out;
  out.residual_count = c.entries().size();
  out.zero = out.residual_count == 0;
  auto& reg = AtomRegistry::global();
  std::vector<MultElement::Entry> sorted = c.entries();
  std::sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) { return reg.less(x.first, y.first); });
  for (std::size_t i = 0; i < sorted.size() && i < sample_limit; ++i)
    out.sample.push_back(sorted[i].second.str() + " * log " + reg.render(sorted[i].first));
  return out;
}

}  // namespace zagier
