#include "gran/oracle/enumerate.hpp"

#include <stdexcept>

#include "gran/errors.hpp"

namespace gran::oracle {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

std::uint64_t bell(std::size_t n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row)
      next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::uint64_t granule_count(std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= n; ++k)
    total += binomial(n, k) * bell(k);
  return total;
}

std::uint64_t scope_size(const EnumerationScope &scope) {
  const std::uint64_t extra = scope.include_empty ? 1 : 0;
  switch (scope.subject) {
  case Subject::subsets:
    return (std::uint64_t{1} << scope.n) - 1 + extra;
  case Subject::granules:
    return granule_count(scope.n) + extra;
  case Subject::quotient_granules:
    return bell(scope.n) + extra;
  case Subject::triples: {
    const auto g = granule_count(scope.n) + extra;
    return g * g * g;
  }
  }
  return 0;
}

std::vector<std::vector<ElementSet>> set_partitions(ElementSet s) {
  const auto members = s.indices();
  const std::size_t k = members.size();
  std::vector<std::vector<ElementSet>> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  // growth[i] is the block of members[i]; ceiling[i] = max(growth[0..i]).
  std::vector<std::size_t> growth(k, 0), ceiling(k, 0);
  for (;;) {
    std::vector<ElementSet> blocks(ceiling[k - 1] + 1);
    for (std::size_t i = 0; i < k; ++i)
      blocks[growth[i]].insert(members[i]);
    out.push_back(std::move(blocks));

    std::size_t i = k - 1;
    while (i > 0 && growth[i] == ceiling[i - 1] + 1)
      --i;
    if (i == 0)
      break;
    ++growth[i];
    ceiling[i] = std::max(ceiling[i - 1], growth[i]);
    for (std::size_t j = i + 1; j < k; ++j) {
      growth[j] = 0;
      ceiling[j] = ceiling[i];
    }
  }
  return out;
}

std::vector<ElementSet> enumerate_subsets(std::size_t n, bool include_empty) {
  if (n > kMaxUniverse - 1)
    throw CapExceededError("subset enumeration size", n, kMaxUniverse - 1);
  std::vector<ElementSet> out;
  for (std::uint64_t mask = include_empty ? 0 : 1; mask < (std::uint64_t{1} << n); ++mask)
    out.emplace_back(mask);
  return out;
}

std::vector<Granule> enumerate_granules(const EnumerationScope &scope, const UniversePtr &u) {
  if (scope.n > kMaxEnumerationSize)
    throw CapExceededError("enumeration universe size", scope.n, kMaxEnumerationSize);
  if (u->size() != scope.n)
    throw std::invalid_argument("universe size does not match the enumeration scope");
  std::vector<Granule> out;
  if (scope.include_empty)
    out.push_back(Granule::empty(u));
  switch (scope.subject) {
  case Subject::subsets:
  case Subject::triples:
    throw std::invalid_argument("scope subject does not enumerate granules");
  case Subject::quotient_granules:
    for (auto &blocks : set_partitions(u->full()))
      out.push_back(make_canonical_granule(u, std::move(blocks)));
    break;
  case Subject::granules:
    for (auto carrier : enumerate_subsets(scope.n, false))
      for (auto &blocks : set_partitions(carrier))
        out.push_back(make_canonical_granule(u, std::move(blocks)));
    break;
  }
  return out;
}

std::vector<Granule> enumerate_granules(const EnumerationScope &scope) {
  return enumerate_granules(scope, Universe::numbered(scope.n));
}

std::vector<Granule> single_merges(const Granule &b) {
  std::vector<Granule> out;
  const auto &blocks = b.blocks();
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    for (std::size_t y = x + 1; y < blocks.size(); ++y) {
      std::vector<ElementSet> merged;
      for (std::size_t z = 0; z < blocks.size(); ++z)
        if (z != x && z != y)
          merged.push_back(blocks[z]);
      merged.push_back(blocks[x] | blocks[y]);
      out.push_back(make_canonical_granule(b.universe(), std::move(merged)));
    }
  }
  return out;
}

} // namespace gran::oracle
