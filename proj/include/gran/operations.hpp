#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <utility>

#include "gran/granule.hpp"
#include "gran/rational.hpp"
#include "gran/relation.hpp"

namespace gran {

/// Throws UniverseMismatchError unless a and b share a universe.
void require_same_universe(const Granule &a, const Granule &b);

/// Greatest lower bound: all nonempty pairwise block intersections.
Granule meet(const Granule &a, const Granule &b);

/// Pair-set union of both relations; in general not an equivalence.
Relation join_relation(const Granule &a, const Granule &b);

/// Least upper bound: blocks sharing an element are merged transitively.
Granule quotient_join(const Granule &a, const Granule &b);

/// a ⪯ b: every block of a lies inside some block of b.
bool is_finer(const Granule &a, const Granule &b);
/// b ⪰ a, spelled from the coarser side.
inline bool is_coarser(const Granule &b, const Granule &a) { return is_finer(a, b); }

enum class Ordering {
  equal,
  strictly_finer_lhs, ///< a ≺ b
  strictly_finer_rhs, ///< b ≺ a
  incomparable,
};

Ordering compare(const Granule &a, const Granule &b);
std::string_view to_string(Ordering o);

/// Probability table p(a_i ∩ b_j) = |a_i ∩ b_j| / n over block-index pairs.
/// Only nonzero entries are stored.
class MeetDistribution {
public:
  MeetDistribution(std::size_t rows, std::size_t cols, std::size_t n)
      : rows_(rows), cols_(cols), n_(n) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t universe_size() const { return n_; }

  /// Zero when (i, j) has no stored entry.
  Rational at(std::size_t i, std::size_t j) const;
  const std::map<std::pair<std::size_t, std::size_t>, Rational> &entries() const {
    return entries_;
  }
  Rational total() const;

  void set_count(std::size_t i, std::size_t j, std::size_t count);

private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t n_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

/// Rows index blocks of a, columns blocks of b.
MeetDistribution prob_distribution(const Granule &a, const Granule &b);

/// min(|carrier(a)|, |carrier(b)|) / n.
Rational mass_ratio(const Granule &a, const Granule &b);

} // namespace gran
