#pragma once

#include <atomic>
#include <cstdint>
#include <shared_mutex>
#include <string>

#include "zagier/exact/factor_refine.hpp"

namespace zagier {

using AtomId = std::uint32_t;

// Session-wide coprime atom basis for F*⊗Q. Append-only; an atom that gets
// split by a later insertion keeps its id and resolves to its factors.
// All members are safe to call concurrently.
class AtomRegistry {
 public:
  static AtomRegistry& global();

  // Exponents of p (nonzero) over active atoms. Sign is discarded.
  AtomExponents insert(const MultiPoly& p);
  [[nodiscard]] AtomExponents resolve(const AtomExponents& e) const;

  [[nodiscard]] MultiPoly atom(AtomId id) const;
  [[nodiscard]] bool retired(AtomId id) const;
  [[nodiscard]] std::string render(AtomId id) const;
  // Deterministic order on atoms that does not depend on insertion order.
  [[nodiscard]] bool less(AtomId a, AtomId b) const;

  // Bumped on every retirement; values built at the current generation
  // contain no retired atoms.
  [[nodiscard]] std::size_t generation() const noexcept { return generation_.load(std::memory_order_acquire); }
  [[nodiscard]] std::size_t size() const;

 private:
  AtomRegistry() = default;

  mutable std::shared_mutex mutex_;
  CoprimeBasis basis_;
  std::atomic<std::size_t> generation_{0};
};

}  // namespace zagier
