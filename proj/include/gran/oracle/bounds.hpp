#pragma once

#include <optional>
#include <span>

#include "gran/element_set.hpp"
#include "gran/errors.hpp"
#include "gran/granule.hpp"

namespace gran::oracle {

/// Greatest family member below a target and least member above it.
template <class T> struct Bounds {
  std::optional<T> below;
  std::optional<T> above;

  const T &below_or_throw() const {
    if (!below)
      throw NoBoundError("no family member lies below the target");
    return *below;
  }
  const T &above_or_throw() const {
    if (!above)
      throw NoBoundError("no family member lies above the target");
    return *above;
  }
};

/// Linear scan under ⊆.
Bounds<ElementSet> brute_bound(ElementSet target, std::span<const ElementSet> family);
/// Linear scan under ⪯.
Bounds<Granule> brute_bound(const Granule &target, std::span<const Granule> family);

} // namespace gran::oracle
