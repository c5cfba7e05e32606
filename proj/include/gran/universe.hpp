#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gran/element_set.hpp"

namespace gran {

/// Ordered finite set of named elements. An element's index is its position.
class Universe {
public:
  /// Throws gran::Error on duplicate names, an empty list, or more than
  /// kMaxUniverse elements.
  explicit Universe(std::vector<std::string> names);

  /// Universe with elements named "1", ..., "n".
  static std::shared_ptr<const Universe> numbered(std::size_t n);
  static std::shared_ptr<const Universe> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string &name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string> &names() const { return names_; }

  /// Throws UnknownElementError.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  ElementSet full() const { return ElementSet::full(size()); }

  bool operator==(const Universe &other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// True when both pointers denote the same universe (identity or equal names).
bool same_universe(const UniversePtr &a, const UniversePtr &b);

/// Text form "{a,b,c}" with members in universe order; "{}" when empty.
std::string format_set(ElementSet s, const Universe &u);

/// Parses "{a,b}" against u. Throws ParseError or UnknownElementError.
ElementSet parse_set(std::string_view text, const Universe &u);

} // namespace gran
