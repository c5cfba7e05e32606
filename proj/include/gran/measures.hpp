#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "gran/element_set.hpp"
#include "gran/granule.hpp"
#include "gran/rational.hpp"
#include "gran/universe.hpp"

namespace gran {

/// Selects one of the five crisp subsethood measures sh1..sh5:
///   sh1(b,a) = |aᶜ ∪ b| / n
///   sh2(b,a) = |a ∩ b| / |a|
///   sh3(b,a) = |b| / |a ∪ b|
///   sh4(b,a) = |aᶜ| / |aᶜ ∪ bᶜ|
///   sh5(b,a) = |aᶜ ∩ bᶜ| / |bᶜ|
/// sh(b,a) is the degree to which a is a subset of b.
enum class MeasureKind { sh1, sh2, sh3, sh4, sh5 };

inline constexpr std::array<MeasureKind, 5> kAllMeasureKinds = {
    MeasureKind::sh1, MeasureKind::sh2, MeasureKind::sh3, MeasureKind::sh4, MeasureKind::sh5};

std::string_view to_string(MeasureKind k);
/// Accepts "sh1".."sh5" (case-insensitive) or "1".."5".
std::optional<MeasureKind> parse_measure_kind(std::string_view text);

/// Exact value in [0, 1].
class MeasureValue {
public:
  MeasureValue() = default;
  /// Throws std::out_of_range outside [0, 1].
  explicit MeasureValue(Rational value);

  const Rational &value() const { return value_; }
  double to_double() const;
  std::string to_string() const;

  auto operator<=>(const MeasureValue &) const = default;

private:
  Rational value_{0};
};

/// Entropy in units of the chosen logarithm base (bits by default).
struct EntropyValue {
  double value = 0.0;
  /// Set when some term had p > 0 and sh = 0, so that -log sh was replaced
  /// by log n.
  bool clamped = false;
};

inline constexpr double kDefaultLogBase = 2.0;
inline constexpr double kEntropyTolerance = 1e-9;

/// sh_k(b, a) over a universe of size n. Whenever a denominator vanishes
/// the configuration forces a ⊆ b and the value is 1.
Rational subsethood_value(MeasureKind k, ElementSet b, ElementSet a, std::size_t n);

MeasureValue subsethood(MeasureKind k, ElementSet b, ElementSet a, const Universe &u);
/// 1 - subsethood.
MeasureValue supsethood(MeasureKind k, ElementSet b, ElementSet a, const Universe &u);

/// G_k(B|A) = Σ p(a_i ∩ b_j) · sh_k(b_j, a_i).
MeasureValue conditional_granularity(MeasureKind k, const Granule &b, const Granule &a);
/// F_k(B|A) = m/n - G_k(B|A), m = min(|carrier A|, |carrier B|).
MeasureValue conditional_fineness(MeasureKind k, const Granule &b, const Granule &a);

/// G_k(A | {X}).
MeasureValue granularity(MeasureKind k, const Granule &a);
/// F_k(A | {X}).
MeasureValue fineness(MeasureKind k, const Granule &a);

/// Every meet probability is zero, i.e. the carriers are disjoint.
bool are_independent(const Granule &a, const Granule &b);
/// b is independent of a and consists of a single block.
bool is_quotient_complement(const Granule &b, const Granule &a);

/// H'_k(B|A) = -Σ p(a_i ∩ b_j) · log sh_k(b_j, a_i), zero-probability terms
/// dropped.
EntropyValue conditional_fineness_entropy(MeasureKind k, const Granule &b, const Granule &a,
                                          double log_base = kDefaultLogBase);
/// H_k(B|A) = (m/n) log n - H'_k(B|A).
EntropyValue conditional_granularity_entropy(MeasureKind k, const Granule &b, const Granule &a,
                                             double log_base = kDefaultLogBase);

/// H_k(A | {X}).
EntropyValue entropy(MeasureKind k, const Granule &a, double log_base = kDefaultLogBase);
/// H'_k(A | {X}).
EntropyValue co_entropy(MeasureKind k, const Granule &a, double log_base = kDefaultLogBase);

/// All four conditional measures of one (B, A) pair for one kind.
struct MeasureSet {
  MeasureKind kind;
  MeasureValue granularity;
  MeasureValue fineness;
  EntropyValue granularity_entropy;
  EntropyValue fineness_entropy;
  Rational mass; ///< m/n
};

MeasureSet measure_all(MeasureKind k, const Granule &b, const Granule &a,
                       double log_base = kDefaultLogBase);

} // namespace gran
