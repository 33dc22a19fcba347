#include "zagier/hyperlog/iterm.hpp"

#include <stdexcept>

namespace zagier {

bool ITerm::convergent() const {
  if (word.empty()) return true;
  return !(a0 == word.front()) && !(word.back() == end);
}

std::string ITerm::str() const {
  std::string s = "I(" + a0.str() + "; ";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ", ";
    s += word[i].str();
  }
  return s + "; " + end.str() + ")";
}

std::size_t ITerm::hash() const noexcept {
  std::size_t h = a0.hash() * 31 + end.hash();
  for (const auto& p : word) h = h * 0x100000001b3ULL ^ p.hash();
  return h;
}

void IComb::add(const ITerm& t, const BigRational& c) {
  if (c.is_zero()) return;
  if (!t.word.empty() && t.a0 == t.end) return;
  const ITerm& key = t.word.empty() ? unit_term() : t;
  if (terms_.empty()) weight_ = key.weight();
  if (key.weight() != weight_) throw std::invalid_argument("IComb: mixed weights " + std::to_string(weight_) + " and " + key.str());
  auto it = index_.find(key);
  if (it == index_.end()) {
    index_.emplace(key, terms_.size());
    terms_.emplace_back(key, c);
    return;
  }
  auto& coef = terms_[it->second].second;
  coef += c;
  if (!coef.is_zero()) return;
  const std::size_t pos = it->second;
  index_.erase(it);
  if (pos + 1 != terms_.size()) {
    terms_[pos] = std::move(terms_.back());
    index_[terms_[pos].first] = pos;
  }
  terms_.pop_back();
}

IComb& IComb::operator+=(const IComb& rhs) {
  for (const auto& [t, c] : rhs.terms_) add(t, c);
  return *this;
}

IComb& IComb::operator-=(const IComb& rhs) {
  for (const auto& [t, c] : rhs.terms_) add(t, -c);
  return *this;
}

IComb IComb::scaled(const BigRational& c) const {
  IComb out;
  if (c.is_zero()) return out;
  for (const auto& [t, v] : terms_) out.add(t, v * c);
  return out;
}

std::string IComb::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : terms_) {
    if (!s.empty()) s += "\n";
    s += c.str() + " * " + t.str();
  }
  return s;
}

IComb shuffle_product(const PPoint& a, const Word& w1, const Word& w2, const PPoint& b) {
  IComb out;
  for (const auto& [w, m] : shuffle(w1, w2)) out.add(ITerm{a, w, b}, BigRational(m));
  return out;
}

}  // namespace zagier
