#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zagier/config/projective.hpp"

namespace zagier {

using Word = std::vector<PPoint>;

// I(a0; a1, ..., an; a_end).
struct ITerm {
  PPoint a0;
  Word word;
  PPoint end;

  [[nodiscard]] unsigned weight() const noexcept { return static_cast<unsigned>(word.size()); }
  // a0 ≠ a1 and an ≠ a_end.
  [[nodiscard]] bool convergent() const;
  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::size_t hash() const noexcept;

  friend bool operator==(const ITerm& a, const ITerm& b) {
    return a.a0 == b.a0 && a.end == b.end && a.word == b.word;
  }
};

}  // namespace zagier

template <>
struct std::hash<zagier::ITerm> {
  std::size_t operator()(const zagier::ITerm& t) const noexcept { return t.hash(); }
};

namespace zagier {

// Q-linear combination of iterated integrals of one weight. Weight-0 terms
// collapse to a single unit term; I(a; w; a) with w nonempty is dropped.
class IComb {
 public:
  IComb() = default;
  explicit IComb(const ITerm& t, const BigRational& c = BigRational(1)) { add(t, c); }

  static ITerm unit_term() { return ITerm{PPoint(0), {}, PPoint(0)}; }

  void add(const ITerm& t, const BigRational& c = BigRational(1));
  IComb& operator+=(const IComb& rhs);
  IComb& operator-=(const IComb& rhs);
  friend IComb operator+(IComb a, const IComb& b) { return a += b; }
  friend IComb operator-(IComb a, const IComb& b) { return a -= b; }
  [[nodiscard]] IComb scaled(const BigRational& c) const;
  // Equal as formal combinations, regardless of term order.
  friend bool operator==(const IComb& a, const IComb& b) { return (a - b).empty(); }

  // Terms in insertion order, zero coefficients removed.
  [[nodiscard]] const std::vector<std::pair<ITerm, BigRational>>& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  // Weight of the terms; 0 for an empty combination.
  [[nodiscard]] unsigned weight() const noexcept { return weight_; }

  [[nodiscard]] std::string str() const;

 private:
  std::vector<std::pair<ITerm, BigRational>> terms_;
  std::unordered_map<ITerm, std::size_t> index_;
  unsigned weight_ = 0;
};

// All interleavings of w1 and w2 preserving the internal orders, with
// multiplicities; binomial(|w1|+|w2|, |w1|) words counted with multiplicity.
template <class T>
std::vector<std::pair<std::vector<T>, long>> shuffle(const std::vector<T>& w1, const std::vector<T>& w2) {
  std::vector<std::pair<std::vector<T>, long>> out;
  std::vector<T> cur;
  cur.reserve(w1.size() + w2.size());
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == w1.size() && j == w2.size()) {
      for (auto& [w, m] : out)
        if (w == cur) {
          ++m;
          return;
        }
      out.emplace_back(cur, 1);
      return;
    }
    if (i < w1.size()) {
      cur.push_back(w1[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < w2.size()) {
      cur.push_back(w2[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Shuffle product I(a; w1; b) · I(a; w2; b) as a combination.
IComb shuffle_product(const PPoint& a, const Word& w1, const Word& w2, const PPoint& b);

}  // namespace zagier
