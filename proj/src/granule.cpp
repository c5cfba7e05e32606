#include "gran/granule.hpp"

#include <algorithm>

#include "gran/errors.hpp"
#include "text_scanner.hpp"

namespace gran {

namespace {

void sort_blocks(std::vector<ElementSet> &blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](ElementSet x, ElementSet y) { return x.canonical_less(y); });
}

} // namespace

Granule::Granule(UniversePtr universe, std::vector<ElementSet> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
  if (!universe_)
    throw Error("granule requires a universe");
  const ElementSet full = universe_->full();
  for (const auto &b : blocks_) {
    if (b.empty())
      throw EmptyBlockError("granule blocks must be nonempty");
    if (!b.subset_of(full))
      throw IndexError("block member outside the universe");
    if (carrier_.intersects(b))
      throw OverlapError("granule blocks must be pairwise disjoint");
    carrier_ |= b;
  }
  sort_blocks(blocks_);
}

Granule::Granule(Trusted, UniversePtr universe, std::vector<ElementSet> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
  for (const auto &b : blocks_)
    carrier_ |= b;
  sort_blocks(blocks_);
}

Granule make_canonical_granule(UniversePtr u, std::vector<ElementSet> blocks) {
  return Granule(Granule::Trusted{}, std::move(u), std::move(blocks));
}

Granule Granule::empty(UniversePtr universe) { return Granule(std::move(universe), {}); }

Granule Granule::whole(UniversePtr universe) {
  auto full = universe->full();
  return Granule(std::move(universe), {full});
}

Granule Granule::discrete(UniversePtr universe) {
  std::vector<ElementSet> blocks;
  for (std::size_t i = 0; i < universe->size(); ++i)
    blocks.push_back(ElementSet::of({i}));
  return Granule(std::move(universe), std::move(blocks));
}

std::size_t Granule::block_of(std::size_t element) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].contains(element))
      return i;
  return npos;
}

bool Granule::operator==(const Granule &other) const {
  return blocks_ == other.blocks_ && same_universe(universe_, other.universe_);
}

Granule make_granule(const std::vector<std::vector<std::size_t>> &blocks, UniversePtr u) {
  std::vector<ElementSet> sets;
  sets.reserve(blocks.size());
  for (const auto &b : blocks) {
    for (auto i : b)
      if (i >= u->size())
        throw IndexError("element index " + std::to_string(i) + " outside the universe");
    sets.push_back(ElementSet::from_indices(b));
  }
  return Granule(std::move(u), std::move(sets));
}

std::string to_string(const Granule &g) {
  std::string out = "{";
  for (std::size_t i = 0; i < g.blocks().size(); ++i) {
    if (i)
      out += ',';
    out += format_set(g.blocks()[i], *g.universe());
  }
  out += '}';
  return out;
}

Granule parse_granule(std::string_view text, UniversePtr u) {
  detail::TextScanner scan(text);
  std::vector<ElementSet> blocks;
  scan.expect('{');
  if (scan.peek() != '}') {
    for (;;) {
      scan.expect('{');
      ElementSet block;
      if (scan.peek() != '}') {
        for (;;) {
          auto i = u->index_of(scan.name());
          if (block.contains(i))
            scan.fail("duplicate element");
          block.insert(i);
          if (scan.peek() != ',')
            break;
          scan.expect(',');
        }
      }
      scan.expect('}');
      blocks.push_back(block);
      if (scan.peek() != ',')
        break;
      scan.expect(',');
    }
  }
  scan.expect('}');
  if (!scan.at_end())
    scan.fail("trailing characters");
  return Granule(std::move(u), std::move(blocks));
}

} // namespace gran
