#include "gran/relation.hpp"

#include "gran/errors.hpp"

namespace gran {

Relation::Relation(UniversePtr universe)
    : universe_(std::move(universe)), rows_(universe_->size()) {}

Relation::Relation(UniversePtr universe,
                   const std::vector<std::pair<std::size_t, std::size_t>> &pairs)
    : Relation(std::move(universe)) {
  for (auto [x, y] : pairs)
    insert(x, y);
}

void Relation::insert(std::size_t x, std::size_t y) {
  if (x >= rows_.size() || y >= rows_.size())
    throw IndexError("relation pair outside the universe");
  rows_[x].insert(y);
}

std::size_t Relation::size() const {
  std::size_t total = 0;
  for (auto r : rows_)
    total += r.size();
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < rows_.size(); ++x)
    for (auto y : rows_[x].indices())
      out.emplace_back(x, y);
  return out;
}

ElementSet Relation::field() const {
  ElementSet f;
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (!rows_[x].empty()) {
      f.insert(x);
      f |= rows_[x];
    }
  }
  return f;
}

bool Relation::subset_of(const Relation &other) const {
  for (std::size_t x = 0; x < rows_.size(); ++x)
    if (!rows_[x].subset_of(other.rows_[x]))
      return false;
  return true;
}

bool Relation::is_reflexive_on_field() const {
  for (auto x : field().indices())
    if (!rows_[x].contains(x))
      return false;
  return true;
}

bool Relation::is_symmetric() const {
  for (std::size_t x = 0; x < rows_.size(); ++x)
    for (auto y : rows_[x].indices())
      if (!rows_[y].contains(x))
        return false;
  return true;
}

bool Relation::is_transitive() const {
  // x R y and y R z imply x R z: every successor's row must fit in x's row.
  for (std::size_t x = 0; x < rows_.size(); ++x)
    for (auto y : rows_[x].indices())
      if (!rows_[y].subset_of(rows_[x]))
        return false;
  return true;
}

Relation Relation::operator|(const Relation &other) const {
  if (!same_universe(universe_, other.universe_))
    throw UniverseMismatchError();
  Relation out(universe_);
  for (std::size_t x = 0; x < rows_.size(); ++x)
    out.rows_[x] = rows_[x] | other.rows_[x];
  return out;
}

Relation Relation::operator&(const Relation &other) const {
  if (!same_universe(universe_, other.universe_))
    throw UniverseMismatchError();
  Relation out(universe_);
  for (std::size_t x = 0; x < rows_.size(); ++x)
    out.rows_[x] = rows_[x] & other.rows_[x];
  return out;
}

bool Relation::operator==(const Relation &other) const {
  return rows_ == other.rows_ && same_universe(universe_, other.universe_);
}

Relation relation_of(const Granule &g) {
  Relation r(g.universe());
  for (auto block : g.blocks())
    for (auto x : block.indices())
      for (auto y : block.indices())
        r.insert(x, y);
  return r;
}

Granule granule_of(const Relation &r) {
  if (!r.is_reflexive_on_field())
    throw NotEquivalenceError("relation is not reflexive on its field");
  if (!r.is_symmetric())
    throw NotEquivalenceError("relation is not symmetric");
  if (!r.is_transitive())
    throw NotEquivalenceError("relation is not transitive");
  std::vector<ElementSet> blocks;
  ElementSet seen;
  for (auto x : r.field().indices()) {
    if (seen.contains(x))
      continue;
    blocks.push_back(r.successors(x));
    seen |= r.successors(x);
  }
  return Granule(r.universe(), std::move(blocks));
}

Relation transitive_closure(const Relation &r) {
  // Warshall over bit rows.
  const std::size_t n = r.universe()->size();
  std::vector<ElementSet> rows(n);
  for (std::size_t x = 0; x < n; ++x)
    rows[x] = r.successors(x);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (rows[x].contains(k))
        rows[x] |= rows[k];
  Relation out(r.universe());
  for (std::size_t x = 0; x < n; ++x)
    for (auto y : rows[x].indices())
      out.insert(x, y);
  return out;
}

} // namespace gran
