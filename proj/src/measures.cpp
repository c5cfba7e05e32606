#include "gran/measures.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "gran/operations.hpp"

namespace gran {

std::string_view to_string(MeasureKind k) {
  switch (k) {
  case MeasureKind::sh1:
    return "sh1";
  case MeasureKind::sh2:
    return "sh2";
  case MeasureKind::sh3:
    return "sh3";
  case MeasureKind::sh4:
    return "sh4";
  case MeasureKind::sh5:
    return "sh5";
  }
  return "sh1";
}

std::optional<MeasureKind> parse_measure_kind(std::string_view text) {
  std::string lower;
  for (char c : text)
    lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower.rfind("sh", 0) == 0)
    lower.erase(0, 2);
  if (lower.size() != 1 || lower[0] < '1' || lower[0] > '5')
    return std::nullopt;
  return static_cast<MeasureKind>(lower[0] - '1');
}

MeasureValue::MeasureValue(Rational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1)
    throw std::out_of_range("measure value " + to_fraction_string(value_) +
                            " outside [0, 1]");
}

double MeasureValue::to_double() const { return gran::to_double(value_); }

std::string MeasureValue::to_string() const { return to_fraction_string(value_); }

namespace {

Rational frac(std::size_t num, std::size_t den) {
  return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

} // namespace

Rational subsethood_value(MeasureKind k, ElementSet b, ElementSet a, std::size_t n) {
  const ElementSet ac = a.complement(n);
  const ElementSet bc = b.complement(n);
  std::size_t num = 0;
  std::size_t den = 0;
  switch (k) {
  case MeasureKind::sh1:
    num = (ac | b).size();
    den = n;
    break;
  case MeasureKind::sh2:
    num = (a & b).size();
    den = a.size();
    break;
  case MeasureKind::sh3:
    num = b.size();
    den = (a | b).size();
    break;
  case MeasureKind::sh4:
    num = ac.size();
    den = (ac | bc).size();
    break;
  case MeasureKind::sh5:
    num = (ac & bc).size();
    den = bc.size();
    break;
  }
  // A zero denominator only arises when a ⊆ b.
  if (den == 0)
    return Rational(1);
  return frac(num, den);
}

MeasureValue subsethood(MeasureKind k, ElementSet b, ElementSet a, const Universe &u) {
  return MeasureValue(subsethood_value(k, b, a, u.size()));
}

MeasureValue supsethood(MeasureKind k, ElementSet b, ElementSet a, const Universe &u) {
  return MeasureValue(1 - subsethood_value(k, b, a, u.size()));
}

MeasureValue conditional_granularity(MeasureKind k, const Granule &b, const Granule &a) {
  require_same_universe(a, b);
  const std::size_t n = a.universe_size();
  Rational sum = 0;
  for (auto ai : a.blocks()) {
    for (auto bj : b.blocks()) {
      const auto overlap = (ai & bj).size();
      if (overlap == 0)
        continue;
      sum += frac(overlap, n) * subsethood_value(k, bj, ai, n);
    }
  }
  return MeasureValue(std::move(sum));
}

MeasureValue conditional_fineness(MeasureKind k, const Granule &b, const Granule &a) {
  return MeasureValue(mass_ratio(a, b) - conditional_granularity(k, b, a).value());
}

MeasureValue granularity(MeasureKind k, const Granule &a) {
  return conditional_granularity(k, a, Granule::whole(a.universe()));
}

MeasureValue fineness(MeasureKind k, const Granule &a) {
  return conditional_fineness(k, a, Granule::whole(a.universe()));
}

bool are_independent(const Granule &a, const Granule &b) {
  require_same_universe(a, b);
  return !a.carrier().intersects(b.carrier());
}

bool is_quotient_complement(const Granule &b, const Granule &a) {
  return are_independent(a, b) && b.block_count() == 1;
}

EntropyValue conditional_fineness_entropy(MeasureKind k, const Granule &b, const Granule &a,
                                          double log_base) {
  require_same_universe(a, b);
  const std::size_t n = a.universe_size();
  const double ln_base = std::log(log_base);
  const double log_n = std::log(static_cast<double>(n)) / ln_base;
  EntropyValue out;
  for (auto ai : a.blocks()) {
    for (auto bj : b.blocks()) {
      const auto overlap = (ai & bj).size();
      if (overlap == 0)
        continue;
      const double p = static_cast<double>(overlap) / static_cast<double>(n);
      const Rational s = subsethood_value(k, bj, ai, n);
      if (s == 0) {
        out.value += p * log_n;
        out.clamped = true;
      } else {
        out.value -= p * std::log(to_double(s)) / ln_base;
      }
    }
  }
  if (out.value < 0 && out.value > -kEntropyTolerance)
    out.value = 0;
  return out;
}

EntropyValue conditional_granularity_entropy(MeasureKind k, const Granule &b, const Granule &a,
                                             double log_base) {
  const double log_n = std::log(static_cast<double>(a.universe_size())) / std::log(log_base);
  EntropyValue fine = conditional_fineness_entropy(k, b, a, log_base);
  EntropyValue out{to_double(mass_ratio(a, b)) * log_n - fine.value, fine.clamped};
  if (out.value < 0 && out.value > -kEntropyTolerance)
    out.value = 0;
  return out;
}

EntropyValue entropy(MeasureKind k, const Granule &a, double log_base) {
  return conditional_granularity_entropy(k, a, Granule::whole(a.universe()), log_base);
}

EntropyValue co_entropy(MeasureKind k, const Granule &a, double log_base) {
  return conditional_fineness_entropy(k, a, Granule::whole(a.universe()), log_base);
}

MeasureSet measure_all(MeasureKind k, const Granule &b, const Granule &a, double log_base) {
  return MeasureSet{k,
                    conditional_granularity(k, b, a),
                    conditional_fineness(k, b, a),
                    conditional_granularity_entropy(k, b, a, log_base),
                    conditional_fineness_entropy(k, b, a, log_base),
                    mass_ratio(a, b)};
}

} // namespace gran
