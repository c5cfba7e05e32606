#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gran/rough.hpp"
#include "gran/universe.hpp"

namespace gran {

/// Cover graph of a finite poset; edges run from the smaller to the larger
/// node.
struct HasseDiagram {
  struct Node {
    std::string label;
    bool definable = false;
  };
  std::string name;
  std::vector<Node> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline constexpr std::size_t kMicroHasseCap = 5;
inline constexpr std::size_t kMacroHasseCap = 6;

/// Boolean lattice of all subsets of the universe. When sys is given, nodes
/// in its d₀ are marked definable. Throws CapExceededError for n > 5.
HasseDiagram micro_hasse(const UniversePtr &u, const InformationSystem *sys = nullptr,
                         DefinableMode mode = DefinableMode::paper_literal);

/// Partition lattice of P's blocks, i.e. d₀ for granules. Nodes strictly
/// coarser than P are marked definable. Throws CapExceededError when P has
/// more than 6 blocks.
HasseDiagram macro_hasse(const InformationSystem &sys);

/// DOT text.
std::string to_dot(const HasseDiagram &d);

} // namespace gran
