#include "gran/rough.hpp"

#include <algorithm>
#include <set>

#include "gran/errors.hpp"
#include "gran/operations.hpp"

namespace gran {

InformationSystem::InformationSystem(UniversePtr universe, std::vector<Attribute> attributes)
    : universe_(std::move(universe)), attributes_(std::move(attributes)) {
  std::set<std::string> names;
  for (const auto &attr : attributes_) {
    if (!names.insert(attr.name).second)
      throw Error("duplicate attribute name '" + attr.name + "'");
    if (!same_universe(universe_, attr.granule.universe()))
      throw UniverseMismatchError();
  }
}

const Attribute &InformationSystem::attribute(std::string_view name) const {
  for (const auto &attr : attributes_)
    if (attr.name == name)
      return attr;
  throw Error("unknown attribute '" + std::string(name) + "'");
}

bool InformationSystem::has_attribute(std::string_view name) const {
  return std::any_of(attributes_.begin(), attributes_.end(),
                     [&](const Attribute &a) { return a.name == name; });
}

bool InformationSystem::complete() const {
  return std::all_of(attributes_.begin(), attributes_.end(),
                     [](const Attribute &a) { return a.granule.is_quotient(); });
}

bool InformationSystem::operator==(const InformationSystem &other) const {
  if (!same_universe(universe_, other.universe_) ||
      attributes_.size() != other.attributes_.size())
    return false;
  for (std::size_t i = 0; i < attributes_.size(); ++i)
    if (attributes_[i].name != other.attributes_[i].name ||
        !(attributes_[i].granule == other.attributes_[i].granule))
      return false;
  return true;
}

Granule base_granule(const InformationSystem &sys) {
  if (sys.attributes().empty())
    throw NoAttributesError();
  Granule p = sys.attributes().front().granule;
  for (std::size_t i = 1; i < sys.attributes().size(); ++i)
    p = meet(p, sys.attributes()[i].granule);
  return p;
}

std::string_view to_string(DefinableMode m) {
  return m == DefinableMode::paper_literal ? "paper-literal" : "attribute-generated";
}

std::optional<DefinableMode> parse_definable_mode(std::string_view text) {
  if (text == "paper-literal")
    return DefinableMode::paper_literal;
  if (text == "attribute-generated")
    return DefinableMode::attribute_generated;
  return std::nullopt;
}

DefinableMode default_mode(const InformationSystem &sys) {
  return sys.complete() ? DefinableMode::paper_literal : DefinableMode::attribute_generated;
}

namespace {

std::vector<ElementSet> block_unions(const Granule &p, std::size_t cap) {
  const std::size_t k = p.block_count();
  if (k >= 63 || (std::size_t{1} << k) > cap)
    throw CapExceededError("definable set family", k >= 63 ? cap + 1 : std::size_t{1} << k,
                           cap);
  std::vector<ElementSet> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ElementSet s;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u)
        s |= p.blocks()[i];
    out.push_back(s);
  }
  return out;
}

std::vector<ElementSet> union_intersection_closure(const InformationSystem &sys,
                                                   std::size_t cap) {
  std::set<std::uint64_t> family{0};
  std::vector<ElementSet> pending;
  for (const auto &attr : sys.attributes())
    for (auto b : attr.granule.blocks())
      if (family.insert(b.bits()).second)
        pending.push_back(b);
  while (!pending.empty()) {
    ElementSet s = pending.back();
    pending.pop_back();
    std::vector<ElementSet> fresh;
    for (auto bits : family) {
      ElementSet t(bits);
      for (auto candidate : {s | t, s & t})
        if (!family.count(candidate.bits()))
          fresh.push_back(candidate);
    }
    for (auto f : fresh) {
      if (family.insert(f.bits()).second) {
        if (family.size() > cap)
          throw CapExceededError("definable set family", family.size(), cap);
        pending.push_back(f);
      }
    }
  }
  std::vector<ElementSet> out;
  for (auto bits : family)
    out.emplace_back(bits);
  return out;
}

} // namespace

std::vector<ElementSet> definable_sets(const InformationSystem &sys, DefinableMode mode,
                                       std::size_t cap) {
  std::vector<ElementSet> out = mode == DefinableMode::paper_literal
                                    ? block_unions(base_granule(sys), cap)
                                    : union_intersection_closure(sys, cap);
  std::sort(out.begin(), out.end(),
            [](ElementSet x, ElementSet y) { return x.bits() < y.bits(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool MicroKnowledgeSpace::is_definable(ElementSet s) const {
  return std::binary_search(definables.begin(), definables.end(), s,
                            [](ElementSet x, ElementSet y) { return x.bits() < y.bits(); });
}

MicroKnowledgeSpace make_micro_space(const InformationSystem &sys, DefinableMode mode,
                                     std::size_t cap) {
  return MicroKnowledgeSpace{sys.universe(), base_granule(sys), definable_sets(sys, mode, cap),
                             mode};
}

MicroKnowledgeSpace make_micro_space(const InformationSystem &sys) {
  return make_micro_space(sys, default_mode(sys));
}

std::string_view to_string(SetCategory c) {
  switch (c) {
  case SetCategory::definable:
    return "definable";
  case SetCategory::roughly_definable:
    return "roughly_definable";
  case SetCategory::internally_undefinable:
    return "internally_undefinable";
  case SetCategory::externally_undefinable:
    return "externally_undefinable";
  case SetCategory::totally_undefinable:
    return "totally_undefinable";
  }
  return "totally_undefinable";
}

std::string_view to_string(CoarseCategory c) {
  switch (c) {
  case CoarseCategory::definable:
    return "definable";
  case CoarseCategory::roughly_definable:
    return "roughly_definable";
  case CoarseCategory::undefinable:
    return "undefinable";
  }
  return "undefinable";
}

CoarseCategory coarsen(SetCategory c) {
  switch (c) {
  case SetCategory::definable:
    return CoarseCategory::definable;
  case SetCategory::roughly_definable:
    return CoarseCategory::roughly_definable;
  default:
    return CoarseCategory::undefinable;
  }
}

SetApproximation approximate_set(ElementSet target, const MicroKnowledgeSpace &space) {
  SetApproximation out{};
  for (auto b : space.definables) {
    if (b.subset_of(target))
      out.lower |= target & b;
    if (target.subset_of(b))
      out.upper = out.upper ? (*out.upper & (target | b)) : (target | b);
  }
  const ElementSet full = space.universe->full();
  if (out.upper && out.lower == target && *out.upper == target) {
    out.category = SetCategory::definable;
  } else {
    // No definable superset counts as reaching the top.
    const bool lower_empty = out.lower.empty();
    const bool upper_full = !out.upper || *out.upper == full;
    if (!lower_empty && !upper_full)
      out.category = SetCategory::roughly_definable;
    else if (lower_empty && !upper_full)
      out.category = SetCategory::internally_undefinable;
    else if (!lower_empty)
      out.category = SetCategory::externally_undefinable;
    else
      out.category = SetCategory::totally_undefinable;
  }
  return out;
}

std::pair<ElementSet, ElementSet> pawlak_approximation(ElementSet target, const Granule &base) {
  ElementSet lower;
  ElementSet upper;
  for (auto b : base.blocks()) {
    if (b.subset_of(target))
      lower |= b;
    if (b.intersects(target))
      upper |= b;
  }
  return {lower, upper};
}

namespace {

// Grows every grouping of blocks[0..i) by placing blocks[i] into an existing
// group or a new one.
void group_blocks(const std::vector<ElementSet> &blocks, std::size_t i,
                  std::vector<ElementSet> &groups, std::vector<std::vector<ElementSet>> &out) {
  if (i == blocks.size()) {
    out.push_back(groups);
    return;
  }
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const ElementSet saved = groups[k];
    groups[k] |= blocks[i];
    group_blocks(blocks, i + 1, groups, out);
    groups[k] = saved;
  }
  groups.push_back(blocks[i]);
  group_blocks(blocks, i + 1, groups, out);
  groups.pop_back();
}

} // namespace

std::vector<Granule> definable_granules(const InformationSystem &sys, std::size_t block_cap) {
  const Granule p = base_granule(sys);
  if (p.block_count() > block_cap)
    throw CapExceededError("base granule blocks", p.block_count(), block_cap);
  std::vector<std::vector<ElementSet>> groupings;
  std::vector<ElementSet> groups;
  group_blocks(p.blocks(), 0, groups, groupings);
  std::vector<Granule> out;
  for (auto &grouping : groupings) {
    if (grouping.size() == p.block_count())
      continue; // P itself
    out.push_back(make_canonical_granule(sys.universe(), std::move(grouping)));
  }
  return out;
}

std::vector<Granule> definable_granule_space(const InformationSystem &sys,
                                             std::size_t block_cap) {
  std::vector<Granule> out{base_granule(sys)};
  auto rest = definable_granules(sys, block_cap);
  out.insert(out.end(), std::make_move_iterator(rest.begin()),
             std::make_move_iterator(rest.end()));
  return out;
}

GranuleBounds granule_bounds(const Granule &target, const std::vector<Granule> &space) {
  GranuleBounds out;
  for (const auto &b : space) {
    require_same_universe(target, b);
    if (is_finer(b, target)) {
      Granule term = meet(target, b);
      out.lower = out.lower ? quotient_join(*out.lower, term) : std::move(term);
    }
    if (is_finer(target, b)) {
      Granule term = quotient_join(target, b);
      out.upper = out.upper ? meet(*out.upper, term) : std::move(term);
    }
  }
  return out;
}

GranuleBounds granule_bounds(const Granule &target, const InformationSystem &sys,
                             std::size_t block_cap) {
  return granule_bounds(target, definable_granule_space(sys, block_cap));
}

GranuleApproximation approximate_granule(const Granule &target, const InformationSystem &sys,
                                         std::size_t block_cap) {
  auto bounds = granule_bounds(target, sys, block_cap);
  if (!bounds.lower)
    throw NoBoundError("no definable granule is finer than " + to_string(target));
  if (!bounds.upper)
    throw NoBoundError("no definable granule is coarser than " + to_string(target));
  return GranuleApproximation{std::move(*bounds.lower), std::move(*bounds.upper)};
}

GranuleApproximation complete_shortcut(const Granule &target, const InformationSystem &sys) {
  if (!sys.complete())
    throw IncompleteSystemError();
  const Granule p = base_granule(sys);
  return GranuleApproximation{meet(target, p), quotient_join(target, p)};
}

} // namespace gran
