#include "gran/universe.hpp"

#include "gran/errors.hpp"
#include "text_scanner.hpp"

namespace gran {

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty())
    throw Error("universe must contain at least one element");
  if (names_.size() > kMaxUniverse)
    throw CapExceededError("universe size", names_.size(), kMaxUniverse);
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty())
      throw Error("element names must be nonempty");
    if (!index_.emplace(names_[i], i).second)
      throw Error("duplicate element name '" + names_[i] + "'");
  }
}

std::shared_ptr<const Universe> Universe::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    names.push_back(std::to_string(i));
  return make(std::move(names));
}

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> names) {
  return std::make_shared<const Universe>(std::move(names));
}

std::size_t Universe::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    throw UnknownElementError(std::string(name));
  return it->second;
}

bool Universe::contains(std::string_view name) const {
  return index_.count(std::string(name)) != 0;
}

bool same_universe(const UniversePtr &a, const UniversePtr &b) {
  return a == b || (a && b && *a == *b);
}

std::string format_set(ElementSet s, const Universe &u) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.indices()) {
    if (!first)
      out += ',';
    out += u.name(i);
    first = false;
  }
  out += '}';
  return out;
}


ElementSet parse_set(std::string_view text, const Universe &u) {
  detail::TextScanner scan(text);
  ElementSet s;
  scan.expect('{');
  if (scan.peek() != '}') {
    for (;;) {
      auto i = u.index_of(scan.name());
      if (s.contains(i))
        scan.fail("duplicate element");
      s.insert(i);
      if (scan.peek() == ',') {
        scan.expect(',');
        continue;
      }
      break;
    }
  }
  scan.expect('}');
  if (!scan.at_end())
    scan.fail("trailing characters");
  return s;
}

} // namespace gran
