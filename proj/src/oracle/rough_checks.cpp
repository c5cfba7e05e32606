#include <functional>
#include <optional>
#include <string>

#include "gran/errors.hpp"
#include "gran/oracle/bounds.hpp"
#include "gran/oracle/claims.hpp"
#include "gran/oracle/enumerate.hpp"
#include "gran/rough.hpp"

namespace gran::oracle {

namespace {

CheckReport start(std::size_t n, std::string scope) {
  CheckReport r;
  r.n = n;
  r.scope = std::move(scope);
  return r;
}

void tally(CheckReport &r, bool holds, const std::function<Certificate()> &certificate) {
  ++r.instances;
  if (holds)
    return;
  ++r.violation_count;
  if (r.violations.size() < kMaxStoredCertificates)
    r.violations.push_back(certificate());
}

std::string show(std::optional<ElementSet> s, const Universe &u) {
  return s ? format_set(*s, u) : "none";
}

std::string show(const std::optional<Granule> &g) { return g ? to_string(*g) : "none"; }

InformationSystem system_of(const UniversePtr &u, const std::vector<Granule> &attrs) {
  std::vector<Attribute> list;
  for (std::size_t i = 0; i < attrs.size(); ++i)
    list.push_back({"a" + std::to_string(i + 1), attrs[i]});
  return InformationSystem(u, std::move(list));
}

std::string attribute_text(const std::vector<Granule> &attrs) {
  std::string out;
  for (const auto &g : attrs)
    out += (out.empty() ? "" : " ") + to_string(g);
  return out;
}

} // namespace

// Complete systems of one or two quotient attributes; every subset as target.
CheckReport check_pawlak_agreement(std::size_t n) {
  auto r = start(n, "complete systems");
  auto u = Universe::numbered(n);
  auto partitions = enumerate_granules({n, Subject::quotient_granules, false}, u);
  auto targets = enumerate_subsets(n, true);
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    for (std::size_t j = i; j < partitions.size(); ++j) {
      std::vector<Granule> attrs{partitions[i]};
      if (j != i)
        attrs.push_back(partitions[j]);
      auto sys = system_of(u, attrs);
      const Granule base = base_granule(sys);
      for (auto mode : {DefinableMode::paper_literal, DefinableMode::attribute_generated}) {
        auto space = make_micro_space(sys, mode);
        for (auto t : targets) {
          auto got = approximate_set(t, space);
          auto [lower, upper] = pawlak_approximation(t, base);
          tally(r, got.lower == lower && got.upper == upper, [&] {
            Certificate c;
            c.operands = {{"attributes", attribute_text(attrs)}, {"target", format_set(t, *u)}};
            c.values = {{"lower", format_set(got.lower, *u)},
                        {"upper", show(got.upper, *u)},
                        {"classical lower", format_set(lower, *u)},
                        {"classical upper", format_set(upper, *u)}};
            c.note = std::string(to_string(mode));
            return c;
          });
        }
      }
    }
  }
  return r;
}

// Systems of one or two granule attributes on arbitrary carriers.
CheckReport check_micro_bounds(std::size_t n) {
  auto r = start(n, "systems of one or two granule attributes");
  auto u = Universe::numbered(n);
  auto granules = enumerate_granules({n, Subject::granules, false}, u);
  auto targets = enumerate_subsets(n, true);
  for (std::size_t i = 0; i < granules.size(); ++i) {
    for (std::size_t j = i; j < granules.size(); ++j) {
      std::vector<Granule> attrs{granules[i]};
      if (j != i)
        attrs.push_back(granules[j]);
      auto sys = system_of(u, attrs);
      for (auto mode : {DefinableMode::paper_literal, DefinableMode::attribute_generated}) {
        auto space = make_micro_space(sys, mode);
        for (auto t : targets) {
          auto got = approximate_set(t, space);
          auto want = brute_bound(t, space.definables);
          tally(r, want.below && got.lower == *want.below && got.upper == want.above, [&] {
            Certificate c;
            c.operands = {{"attributes", attribute_text(attrs)}, {"target", format_set(t, *u)}};
            c.values = {{"lower", format_set(got.lower, *u)},
                        {"upper", show(got.upper, *u)},
                        {"scan lower", show(want.below, *u)},
                        {"scan upper", show(want.above, *u)}};
            c.note = std::string(to_string(mode));
            return c;
          });
        }
      }
    }
  }
  return r;
}

// Single-attribute systems whose P has at most four blocks; every granule,
// including the empty one, as target.
CheckReport check_macro_bounds(std::size_t n) {
  auto r = start(n, "single-attribute systems with at most 4 blocks");
  auto u = Universe::numbered(n);
  auto granules = enumerate_granules({n, Subject::granules, true}, u);
  for (const auto &p : granules) {
    if (p.is_empty() || p.block_count() > 4)
      continue;
    auto sys = system_of(u, {p});
    auto space = definable_granule_space(sys);
    for (const auto &t : granules) {
      auto got = granule_bounds(t, space);
      auto want = brute_bound(t, space);
      tally(r, got.lower == want.below && got.upper == want.above, [&] {
        Certificate c;
        c.operands = {{"P", to_string(p)}, {"target", to_string(t)}};
        c.values = {{"lower", show(got.lower)},
                    {"upper", show(got.upper)},
                    {"scan lower", show(want.below)},
                    {"scan upper", show(want.above)}};
        return c;
      });
    }
  }
  return r;
}

// Complete single-attribute systems: A ∧ P and A ∨t P against the bounds.
CheckReport check_shortcut_agreement(std::size_t n) {
  auto r = start(n, "complete single-attribute systems");
  auto u = Universe::numbered(n);
  auto partitions = enumerate_granules({n, Subject::quotient_granules, false}, u);
  for (const auto &p : partitions) {
    auto sys = system_of(u, {p});
    auto space = definable_granule_space(sys);
    for (const auto &a : partitions) {
      auto shortcut = complete_shortcut(a, sys);
      auto bounds = granule_bounds(a, space);
      tally(r, bounds.lower == shortcut.lower && bounds.upper == shortcut.upper, [&] {
        Certificate c;
        c.operands = {{"P", to_string(p)}, {"A", to_string(a)}};
        c.values = {{"A ∧ P", to_string(shortcut.lower)},
                    {"A ∨t P", to_string(shortcut.upper)},
                    {"lower", show(bounds.lower)},
                    {"upper", show(bounds.upper)}};
        return c;
      });
    }
  }
  return r;
}

CheckReport check_enumeration_counts(std::size_t max_n) {
  if (max_n > kMaxEnumerationSize)
    throw CapExceededError("enumeration size", max_n, kMaxEnumerationSize);
  auto r = start(max_n, "n = 1.." + std::to_string(max_n));
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto quotients = enumerate_granules({n, Subject::quotient_granules, false}).size();
    const auto all = enumerate_granules({n, Subject::granules, false}).size();
    tally(r, quotients == bell(n) && all == granule_count(n), [&] {
      Certificate c;
      c.operands = {{"n", std::to_string(n)}};
      c.values = {{"quotient granules", std::to_string(quotients)},
                  {"Bell(n)", std::to_string(bell(n))},
                  {"granules", std::to_string(all)},
                  {"closed form", std::to_string(granule_count(n))}};
      return c;
    });
  }
  return r;
}

} // namespace gran::oracle
