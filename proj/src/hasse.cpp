#include "gran/hasse.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "gran/errors.hpp"
#include "gran/operations.hpp"

namespace gran {

HasseDiagram micro_hasse(const UniversePtr &u, const InformationSystem *sys,
                         DefinableMode mode) {
  const std::size_t n = u->size();
  if (n > kMicroHasseCap)
    throw CapExceededError("micro lattice universe size", n, kMicroHasseCap);
  std::optional<MicroKnowledgeSpace> space;
  if (sys)
    space = make_micro_space(*sys, mode);

  HasseDiagram d;
  d.name = "micro";
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    ElementSet s(mask);
    d.nodes.push_back({format_set(s, *u), space && space->is_definable(s)});
    for (std::size_t x = 0; x < n; ++x)
      if (!s.contains(x))
        d.edges.emplace_back(mask, mask | (std::uint64_t{1} << x));
  }
  return d;
}

HasseDiagram macro_hasse(const InformationSystem &sys) {
  const Granule p = base_granule(sys);
  if (p.block_count() > kMacroHasseCap)
    throw CapExceededError("macro lattice base blocks", p.block_count(), kMacroHasseCap);
  auto space = definable_granule_space(sys, kMacroHasseCap);

  HasseDiagram d;
  d.name = "macro";
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto label = to_string(space[i]);
    index.emplace(label, i);
    // Every entry after P is strictly coarser than P.
    d.nodes.push_back({label, i != 0});
  }
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto &blocks = space[i].blocks();
    for (std::size_t x = 0; x < blocks.size(); ++x) {
      for (std::size_t y = x + 1; y < blocks.size(); ++y) {
        std::vector<ElementSet> merged;
        for (std::size_t z = 0; z < blocks.size(); ++z)
          if (z != x && z != y)
            merged.push_back(blocks[z]);
        merged.push_back(blocks[x] | blocks[y]);
        auto label = to_string(make_canonical_granule(sys.universe(), std::move(merged)));
        d.edges.emplace_back(i, index.at(label));
      }
    }
  }
  return d;
}

namespace {

std::string quoted(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace

std::string to_dot(const HasseDiagram &d) {
  std::ostringstream out;
  out << "digraph " << d.name << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    out << "  n" << i << " [label=" << quoted(d.nodes[i].label);
    if (d.nodes[i].definable)
      out << ", definable=true, style=filled, fillcolor=lightgrey";
    out << "];\n";
  }
  for (auto [from, to] : d.edges)
    out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace gran
