#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gran {

/// Upper bound on universe size; element sets are 64-bit masks.
inline constexpr std::size_t kMaxUniverse = 64;

/// Set of element indices into a universe, stored as a bit mask.
class ElementSet {
public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static ElementSet of(std::initializer_list<std::size_t> indices);
  static ElementSet from_indices(const std::vector<std::size_t> &indices);
  /// {0, ..., n-1}
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  /// Smallest member; undefined for the empty set.
  constexpr std::size_t min() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  /// Complement relative to {0, ..., n-1}.
  constexpr ElementSet complement(std::size_t n) const {
    return ElementSet(~bits_ & full(n).bits_);
  }

  void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  std::vector<std::size_t> indices() const;

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  ElementSet &operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  ElementSet &operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const ElementSet &) const = default;

  /// Orders by smallest member, then by mask; used to canonicalize block order.
  constexpr bool canonical_less(ElementSet o) const {
    if (empty() || o.empty())
      return empty() && !o.empty();
    if (min() != o.min())
      return min() < o.min();
    return bits_ < o.bits_;
  }

private:
  std::uint64_t bits_ = 0;
};

} // namespace gran
