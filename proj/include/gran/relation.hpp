#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gran/element_set.hpp"
#include "gran/granule.hpp"
#include "gran/universe.hpp"

namespace gran {

/// Binary relation on a universe, stored as one successor row per element.
class Relation {
public:
  explicit Relation(UniversePtr universe);
  /// Throws IndexError for out-of-range pairs.
  Relation(UniversePtr universe, const std::vector<std::pair<std::size_t, std::size_t>> &pairs);

  const UniversePtr &universe() const { return universe_; }

  void insert(std::size_t x, std::size_t y);
  bool contains(std::size_t x, std::size_t y) const { return rows_[x].contains(y); }
  ElementSet successors(std::size_t x) const { return rows_[x]; }

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  /// Pairs in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  /// Elements occurring in some pair.
  ElementSet field() const;

  bool subset_of(const Relation &other) const;
  bool is_reflexive_on_field() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_equivalence() const {
    return is_reflexive_on_field() && is_symmetric() && is_transitive();
  }

  Relation operator|(const Relation &other) const;
  Relation operator&(const Relation &other) const;

  bool operator==(const Relation &other) const;

private:
  UniversePtr universe_;
  std::vector<ElementSet> rows_;
};

/// {(x,y) : x and y lie in the same block of g}.
Relation relation_of(const Granule &g);

/// Equivalence classes of r. Throws NotEquivalenceError.
Granule granule_of(const Relation &r);

/// Smallest transitive relation containing r.
Relation transitive_closure(const Relation &r);

} // namespace gran
