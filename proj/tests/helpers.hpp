#pragma once

#include <string_view>

#include "gran/granule.hpp"
#include "gran/universe.hpp"

namespace testing_util {

inline gran::Granule gr(std::string_view text, const gran::UniversePtr &u) {
  return gran::parse_granule(text, u);
}

inline gran::ElementSet set(std::string_view text, const gran::UniversePtr &u) {
  return gran::parse_set(text, *u);
}

} // namespace testing_util
