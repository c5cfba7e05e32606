#include "gran/oracle/bounds.hpp"

#include <vector>

#include "gran/relation.hpp"

namespace gran::oracle {

namespace {

// Picks the member of candidates that every other candidate relates to via
// leq (a greatest element when leq is "≤", least when it is "≥").
template <class T, class Leq>
std::optional<T> extremum(const std::vector<const T *> &candidates, Leq leq) {
  for (const T *c : candidates) {
    bool dominates = true;
    for (const T *other : candidates) {
      if (!leq(*other, *c)) {
        dominates = false;
        break;
      }
    }
    if (dominates)
      return *c;
  }
  return std::nullopt;
}

} // namespace

Bounds<ElementSet> brute_bound(ElementSet target, std::span<const ElementSet> family) {
  std::vector<const ElementSet *> below, above;
  for (const auto &f : family) {
    if (f.subset_of(target))
      below.push_back(&f);
    if (target.subset_of(f))
      above.push_back(&f);
  }
  auto subset = [](ElementSet x, ElementSet y) { return x.subset_of(y); };
  auto superset = [](ElementSet x, ElementSet y) { return y.subset_of(x); };
  return {extremum(below, subset), extremum(above, superset)};
}

Bounds<Granule> brute_bound(const Granule &target, std::span<const Granule> family) {
  // Finer-than is decided by relation inclusion here, independently of the
  // block-containment test used by the library.
  auto finer = [](const Granule &x, const Granule &y) {
    return relation_of(x).subset_of(relation_of(y));
  };
  auto coarser = [&](const Granule &x, const Granule &y) { return finer(y, x); };
  std::vector<const Granule *> below, above;
  for (const auto &f : family) {
    if (finer(f, target))
      below.push_back(&f);
    if (finer(target, f))
      above.push_back(&f);
  }
  return {extremum(below, finer), extremum(above, coarser)};
}

} // namespace gran::oracle
