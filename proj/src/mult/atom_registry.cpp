#include "zagier/mult/atom_registry.hpp"

#include <mutex>

namespace zagier {

AtomRegistry& AtomRegistry::global() {
  static AtomRegistry registry;
  return registry;
}

AtomExponents AtomRegistry::insert(const MultiPoly& p) {
  std::unique_lock lock(mutex_);
  const std::size_t before = basis_.retired_count();
  AtomExponents e = basis_.insert(p);
  if (basis_.retired_count() != before) generation_.store(basis_.retired_count(), std::memory_order_release);
  return e;
}

AtomExponents AtomRegistry::resolve(const AtomExponents& e) const {
  std::shared_lock lock(mutex_);
  return basis_.resolve(e);
}

MultiPoly AtomRegistry::atom(AtomId id) const {
  std::shared_lock lock(mutex_);
  return basis_.atom(id);
}

bool AtomRegistry::retired(AtomId id) const {
  std::shared_lock lock(mutex_);
  return basis_.retired(id);
}

std::string AtomRegistry::render(AtomId id) const {
  const MultiPoly p = atom(id);
  if (p.is_constant() || p.size() == 1) return p.str();
  return "(" + p.str() + ")";
}

bool AtomRegistry::less(AtomId a, AtomId b) const {
  if (a == b) return false;
  std::shared_lock lock(mutex_);
  return poly_less(basis_.atom(a), basis_.atom(b));
}

std::size_t AtomRegistry::size() const {
  std::shared_lock lock(mutex_);
  return basis_.size();
}

}  // namespace zagier
