#include "gran/operations.hpp"

#include <numeric>

#include "gran/errors.hpp"

namespace gran {

void require_same_universe(const Granule &a, const Granule &b) {
  if (!same_universe(a.universe(), b.universe()))
    throw UniverseMismatchError();
}

Granule meet(const Granule &a, const Granule &b) {
  require_same_universe(a, b);
  std::vector<ElementSet> blocks;
  for (auto x : a.blocks())
    for (auto y : b.blocks())
      if (auto z = x & y; !z.empty())
        blocks.push_back(z);
  return make_canonical_granule(a.universe(), std::move(blocks));
}

Relation join_relation(const Granule &a, const Granule &b) {
  require_same_universe(a, b);
  return relation_of(a) | relation_of(b);
}

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y)
      parent_[std::max(x, y)] = std::min(x, y);
  }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

Granule quotient_join(const Granule &a, const Granule &b) {
  require_same_universe(a, b);
  const std::size_t n = a.universe_size();
  DisjointSets sets(n);
  for (const auto *g : {&a, &b})
    for (auto block : g->blocks())
      for (auto x : block.indices())
        sets.unite(block.min(), x);

  const ElementSet carrier = a.carrier() | b.carrier();
  std::vector<ElementSet> by_root(n);
  for (auto x : carrier.indices())
    by_root[sets.find(x)].insert(x);
  std::vector<ElementSet> blocks;
  for (auto s : by_root)
    if (!s.empty())
      blocks.push_back(s);
  return make_canonical_granule(a.universe(), std::move(blocks));
}

bool is_finer(const Granule &a, const Granule &b) {
  require_same_universe(a, b);
  for (auto x : a.blocks()) {
    bool inside = false;
    for (auto y : b.blocks()) {
      if (x.subset_of(y)) {
        inside = true;
        break;
      }
    }
    if (!inside)
      return false;
  }
  return true;
}

Ordering compare(const Granule &a, const Granule &b) {
  const bool ab = is_finer(a, b);
  const bool ba = is_finer(b, a);
  if (ab && ba)
    return Ordering::equal;
  if (ab)
    return Ordering::strictly_finer_lhs;
  if (ba)
    return Ordering::strictly_finer_rhs;
  return Ordering::incomparable;
}

std::string_view to_string(Ordering o) {
  switch (o) {
  case Ordering::equal:
    return "equal";
  case Ordering::strictly_finer_lhs:
    return "strictly_finer_lhs";
  case Ordering::strictly_finer_rhs:
    return "strictly_finer_rhs";
  case Ordering::incomparable:
    return "incomparable";
  }
  return "incomparable";
}

Rational MeetDistribution::at(std::size_t i, std::size_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational MeetDistribution::total() const {
  Rational sum = 0;
  for (const auto &[key, p] : entries_)
    sum += p;
  return sum;
}

void MeetDistribution::set_count(std::size_t i, std::size_t j, std::size_t count) {
  if (count == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = Rational(static_cast<long long>(count), static_cast<long long>(n_));
}

MeetDistribution prob_distribution(const Granule &a, const Granule &b) {
  require_same_universe(a, b);
  MeetDistribution dist(a.block_count(), b.block_count(), a.universe_size());
  for (std::size_t i = 0; i < a.block_count(); ++i)
    for (std::size_t j = 0; j < b.block_count(); ++j)
      dist.set_count(i, j, (a.blocks()[i] & b.blocks()[j]).size());
  return dist;
}

Rational mass_ratio(const Granule &a, const Granule &b) {
  require_same_universe(a, b);
  const auto m = std::min(a.carrier().size(), b.carrier().size());
  return Rational(static_cast<long long>(m), static_cast<long long>(a.universe_size()));
}

} // namespace gran
