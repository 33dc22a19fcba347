#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zagier/mult/mult_element.hpp"

namespace zagier {

inline constexpr unsigned kMaxTensorWeight = 8;
inline constexpr AtomId kNoAtom = std::numeric_limits<AtomId>::max();

// Slots beyond the weight hold kNoAtom so that lexicographic order on the
// whole array is the order on the used prefix.
using TensorKey = std::array<AtomId, kMaxTensorWeight>;

struct TensorKeyHash {
  std::size_t operator()(const TensorKey& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (AtomId a : k) {
      h ^= a + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
    }
    return static_cast<std::size_t>(h);
  }
};

inline TensorKey empty_key() {
  TensorKey k;
  k.fill(kNoAtom);
  return k;
}

using TensorTerm = std::pair<TensorKey, BigRational>;

struct RenderedTerm {
  BigRational coef;
  std::vector<std::string> atoms;
};

// Homogeneous element of (F*⊗Q)^{⊗k}, fully expanded over atoms. Terms are
// sorted by key with nonzero coefficients.
class TensorElement {
 public:
  explicit TensorElement(unsigned weight = 0);

  static TensorElement unit();
  static TensorElement from_mult(const MultElement& m);
  // Arbitrary terms: duplicates are merged, zeros dropped.
  static TensorElement from_terms(unsigned weight, std::vector<TensorTerm> terms);

  [[nodiscard]] unsigned weight() const noexcept { return weight_; }
  [[nodiscard]] const std::vector<TensorTerm>& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

  [[nodiscard]] TensorElement canonical() const;
  [[nodiscard]] TensorElement tensor(const TensorElement& rhs) const;
  [[nodiscard]] TensorElement scaled(const BigRational& c) const;

  TensorElement& operator+=(const TensorElement& rhs);
  TensorElement& operator-=(const TensorElement& rhs);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  TensorElement operator-() const { return scaled(BigRational(-1)); }
  friend bool operator==(const TensorElement& a, const TensorElement& b);

  // Deterministic rendering, independent of atom ids.
  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::vector<RenderedTerm> rendered() const;

 private:
  friend class TensorAccumulator;
  unsigned weight_;
  std::vector<TensorTerm> terms_;
  std::size_t generation_ = 0;
};

// Hash-based accumulation for building large tensors term by term.
class TensorAccumulator {
 public:
  explicit TensorAccumulator(unsigned weight) : weight_(weight) {}

  void add(const TensorKey& key, const BigRational& c);
  void add(const TensorElement& t, const BigRational& scale = BigRational(1));
  void merge(TensorAccumulator&& other);
  [[nodiscard]] unsigned weight() const noexcept { return weight_; }
  TensorElement take();

 private:
  unsigned weight_;
  std::unordered_map<TensorKey, BigRational, TensorKeyHash> terms_;
  std::size_t generation_ = std::numeric_limits<std::size_t>::max();
};

TensorElement tensor_combine(std::span<const TensorElement> parts);

// Shuffle product of tensors: the symbol of a product of iterated integrals.
TensorElement shuffle_tensor(const TensorElement& a, const TensorElement& b);

// Λ²(F*⊗Q) ⊗ (F*⊗Q)^{⊗(k−2)}: the leading two slots are antisymmetric and
// stored with the smaller atom id first; diagonal pairs are absent.
class WedgeTensor {
 public:
  explicit WedgeTensor(unsigned weight = 2);

  // a⊗b⊗rest ↦ a∧b⊗rest.
  static WedgeTensor from_tensor(const TensorElement& t);

  [[nodiscard]] unsigned weight() const noexcept { return weight_; }
  [[nodiscard]] const std::vector<TensorTerm>& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  [[nodiscard]] WedgeTensor canonical() const;
  // a∧b⊗rest ↦ a⊗b⊗rest − b⊗a⊗rest.
  [[nodiscard]] TensorElement to_tensor() const;
  [[nodiscard]] WedgeTensor scaled(const BigRational& c) const;
  // Appends the slots of rhs after the existing ones.
  [[nodiscard]] WedgeTensor tensor(const TensorElement& rhs) const;

  WedgeTensor& operator+=(const WedgeTensor& rhs);
  WedgeTensor& operator-=(const WedgeTensor& rhs);
  friend WedgeTensor operator+(WedgeTensor a, const WedgeTensor& b) { return a += b; }
  friend WedgeTensor operator-(WedgeTensor a, const WedgeTensor& b) { return a -= b; }
  friend bool operator==(const WedgeTensor& a, const WedgeTensor& b);

  [[nodiscard]] std::string str() const;

 private:
  unsigned weight_;
  std::vector<TensorTerm> terms_;
  std::size_t generation_ = 0;
};

// Λ² ⊗ T ⊗ T, the target of the weight-4 cobracket chain.
using WedgeChainElement = WedgeTensor;

WedgeChainElement wedge_chain(const TensorElement& first, const TensorElement& rest);
// a∧b in Λ²(F*⊗Q).
WedgeTensor wedge(const MultElement& a, const MultElement& b);

ZeroCheck is_zero(const TensorElement& t, std::size_t sample_limit = 10);
ZeroCheck is_zero(const WedgeTensor& t, std::size_t sample_limit = 10);

}  // namespace zagier
