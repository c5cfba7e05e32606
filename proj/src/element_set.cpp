#include "gran/element_set.hpp"

namespace gran {

ElementSet ElementSet::of(std::initializer_list<std::size_t> indices) {
  ElementSet s;
  for (auto i : indices)
    s.insert(i);
  return s;
}

ElementSet ElementSet::from_indices(const std::vector<std::size_t> &indices) {
  ElementSet s;
  for (auto i : indices)
    s.insert(i);
  return s;
}

std::vector<std::size_t> ElementSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  return out;
}

} // namespace gran
