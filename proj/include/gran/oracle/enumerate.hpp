#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gran/element_set.hpp"
#include "gran/granule.hpp"
#include "gran/universe.hpp"

namespace gran::oracle {

inline constexpr std::size_t kMaxEnumerationSize = 5;

enum class Subject {
  subsets,           ///< σ(X)
  granules,          ///< equivalence granules on every subset
  quotient_granules, ///< partitions of X
  triples,           ///< ordered triples of granules (counting only)
};

struct EnumerationScope {
  std::size_t n = 3;
  Subject subject = Subject::granules;
  /// Adds ∅ (the empty set or empty granule) in front.
  bool include_empty = false;
};

std::uint64_t binomial(std::size_t n, std::size_t k);
std::uint64_t bell(std::size_t n);
/// Nonempty equivalence granules over subsets of an n-set: Σ_{k≥1} C(n,k)·Bell(k).
std::uint64_t granule_count(std::size_t n);
std::uint64_t scope_size(const EnumerationScope &scope);

/// Partitions of s via restricted growth strings over its members in index
/// order. The partition of ∅ is the single empty family.
std::vector<std::vector<ElementSet>> set_partitions(ElementSet s);

/// Subsets of {0..n-1} in binary counting order.
std::vector<ElementSet> enumerate_subsets(std::size_t n, bool include_empty = true);

/// Every granule of the scope exactly once: carriers in binary counting
/// order, partitions in restricted-growth order. Throws CapExceededError for
/// n > kMaxEnumerationSize, std::invalid_argument for Subject::triples.
std::vector<Granule> enumerate_granules(const EnumerationScope &scope, const UniversePtr &u);
std::vector<Granule> enumerate_granules(const EnumerationScope &scope);

/// All granules obtained from b by merging exactly two of its blocks.
std::vector<Granule> single_merges(const Granule &b);

} // namespace gran::oracle
