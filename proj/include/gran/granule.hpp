#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gran/element_set.hpp"
#include "gran/universe.hpp"

namespace gran {

/// An equivalence granule: pairwise-disjoint nonempty blocks over a subset
/// (the carrier) of a universe. Blocks are kept in canonical order (by
/// smallest member), so equality is structural. The granule with no blocks
/// is the empty granule.
class Granule {
public:
  /// Validates and canonicalizes. Throws EmptyBlockError, OverlapError, or
  /// IndexError for members outside the universe.
  Granule(UniversePtr universe, std::vector<ElementSet> blocks);

  static Granule empty(UniversePtr universe);
  /// The single-block granule {X}.
  static Granule whole(UniversePtr universe);
  /// All singletons of the universe.
  static Granule discrete(UniversePtr universe);

  const UniversePtr &universe() const { return universe_; }
  std::size_t universe_size() const { return universe_->size(); }
  const std::vector<ElementSet> &blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  ElementSet carrier() const { return carrier_; }
  bool is_empty() const { return blocks_.empty(); }
  /// Carrier is the whole universe.
  bool is_quotient() const { return carrier_ == universe_->full(); }

  /// Index of the block containing element i, or npos.
  std::size_t block_of(std::size_t element) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool operator==(const Granule &other) const;

private:
  struct Trusted {};
  Granule(Trusted, UniversePtr universe, std::vector<ElementSet> blocks);
  friend Granule make_canonical_granule(UniversePtr, std::vector<ElementSet>);

  UniversePtr universe_;
  std::vector<ElementSet> blocks_;
  ElementSet carrier_;
};

/// Checked constructor from block index lists.
Granule make_granule(const std::vector<std::vector<std::size_t>> &blocks, UniversePtr u);

/// Builds a granule from blocks already known to be disjoint and nonempty;
/// only sorts them. Used on hot enumeration paths.
Granule make_canonical_granule(UniversePtr u, std::vector<ElementSet> blocks);

/// Canonical text form, e.g. "{{a,b},{c}}"; the empty granule prints "{}".
std::string to_string(const Granule &g);

/// Parses the canonical text form (whitespace tolerated).
Granule parse_granule(std::string_view text, UniversePtr u);

} // namespace gran
