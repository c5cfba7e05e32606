#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gran/element_set.hpp"
#include "gran/granule.hpp"
#include "gran/universe.hpp"

namespace gran {

struct Attribute {
  std::string name;
  /// Partition of the objects where the attribute is defined.
  Granule granule;
};

/// A universe with named attributes, each inducing an equivalence granule on
/// the subset of objects where it is defined.
class InformationSystem {
public:
  /// Throws gran::Error on duplicate attribute names and
  /// UniverseMismatchError on foreign granules.
  InformationSystem(UniversePtr universe, std::vector<Attribute> attributes);

  const UniversePtr &universe() const { return universe_; }
  const std::vector<Attribute> &attributes() const { return attributes_; }
  const Attribute &attribute(std::string_view name) const;
  bool has_attribute(std::string_view name) const;

  /// Every attribute is defined on every object.
  bool complete() const;

  bool operator==(const InformationSystem &other) const;

private:
  UniversePtr universe_;
  std::vector<Attribute> attributes_;
};

/// P: the meet of all attribute granules. Throws NoAttributesError.
Granule base_granule(const InformationSystem &sys);

/// How definable sets are generated.
///  paper_literal:       nonempty unions of blocks of P.
///  attribute_generated: closure of every attribute block under ∪ and ∩.
enum class DefinableMode { paper_literal, attribute_generated };

std::string_view to_string(DefinableMode m);
std::optional<DefinableMode> parse_definable_mode(std::string_view text);
/// paper_literal for complete systems, attribute_generated otherwise.
DefinableMode default_mode(const InformationSystem &sys);

inline constexpr std::size_t kDefaultDefinableCap = std::size_t{1} << 20;

/// d₀: the definable sets with ∅ adjoined, sorted by mask.
/// Throws CapExceededError when the family would exceed cap.
std::vector<ElementSet> definable_sets(const InformationSystem &sys, DefinableMode mode,
                                       std::size_t cap = kDefaultDefinableCap);

/// The micro knowledge space generated by a system.
struct MicroKnowledgeSpace {
  UniversePtr universe;
  Granule base;
  std::vector<ElementSet> definables; ///< d₀, sorted, includes ∅
  DefinableMode mode;

  bool is_definable(ElementSet s) const;
};

MicroKnowledgeSpace make_micro_space(const InformationSystem &sys, DefinableMode mode,
                                     std::size_t cap = kDefaultDefinableCap);
MicroKnowledgeSpace make_micro_space(const InformationSystem &sys);

/// Pawlak's four classes plus the definable case.
enum class SetCategory {
  definable,
  roughly_definable,
  internally_undefinable,
  externally_undefinable,
  totally_undefinable,
};

/// Coarser split: definable, roughly definable, or roughly/totally undefinable.
enum class CoarseCategory { definable, roughly_definable, undefinable };

std::string_view to_string(SetCategory c);
std::string_view to_string(CoarseCategory c);
CoarseCategory coarsen(SetCategory c);

struct SetApproximation {
  ElementSet lower;
  /// Absent when no definable set contains the target.
  std::optional<ElementSet> upper;
  SetCategory category;
};

/// lower = ⋃{A ∩ B : B ∈ d₀, B ⊆ A}, upper = ⋂{A ∪ B : B ∈ d₀, B ⊇ A}.
SetApproximation approximate_set(ElementSet target, const MicroKnowledgeSpace &space);

/// Classical approximations from P alone: union of blocks inside the target,
/// union of blocks meeting it.
std::pair<ElementSet, ElementSet> pawlak_approximation(ElementSet target, const Granule &base);

inline constexpr std::size_t kDefaultMacroBlockCap = 10;

/// All granules strictly coarser than P with the same carrier (partitions of
/// P's blocks, minus P). Throws CapExceededError when P has more than
/// block_cap blocks.
std::vector<Granule> definable_granules(const InformationSystem &sys,
                                        std::size_t block_cap = kDefaultMacroBlockCap);

/// d₀ for granules: P followed by definable_granules.
std::vector<Granule> definable_granule_space(const InformationSystem &sys,
                                             std::size_t block_cap = kDefaultMacroBlockCap);

struct GranuleBounds {
  std::optional<Granule> lower;
  std::optional<Granule> upper;
};

struct GranuleApproximation {
  Granule lower;
  Granule upper;
};

/// lower = ⋁_t{A ∧ B : B ∈ d₀, A ⪰ B}, upper = ⋀{A ∨_t B : B ∈ d₀, B ⪰ A};
/// a side is absent when its family is empty.
GranuleBounds granule_bounds(const Granule &target, const std::vector<Granule> &space);
GranuleBounds granule_bounds(const Granule &target, const InformationSystem &sys,
                             std::size_t block_cap = kDefaultMacroBlockCap);

/// Throws NoBoundError when either side is absent.
GranuleApproximation approximate_granule(const Granule &target, const InformationSystem &sys,
                                         std::size_t block_cap = kDefaultMacroBlockCap);

/// lower = A ∧ P, upper = A ∨_t P. Throws IncompleteSystemError.
GranuleApproximation complete_shortcut(const Granule &target, const InformationSystem &sys);

} // namespace gran
