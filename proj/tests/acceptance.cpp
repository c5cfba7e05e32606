// Acceptance run: one PASS/FAIL line per criterion. Every criterion is
// computed twice, by the reference oracle in oracle_support.hpp and by the
// library, and passes only when both agree and report zero violations.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gran/errors.hpp"
#include "gran/measures.hpp"
#include "gran/operations.hpp"
#include "gran/oracle/claims.hpp"
#include "gran/oracle/enumerate.hpp"
#include "gran/rough.hpp"
#include "oracle_support.hpp"

using namespace gran;

namespace {

constexpr double kTol = 1e-9;

struct Verdict {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int number, const std::string &title, const Verdict &v, double seconds) {
  std::printf("[%s] %d. %s (%.2f s)%s%s\n", v.pass ? "PASS" : "FAIL", number, title.c_str(),
              seconds, v.detail.empty() ? "" : ": ", v.detail.c_str());
  std::fflush(stdout);
  if (!v.pass)
    ++failures;
}

void run(int number, const std::string &title, const std::function<Verdict()> &body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception &e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  report(number, title,
         v, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

std::string text(const ref::Partition &p) {
  std::string out = "{";
  bool first_block = true;
  for (const auto &b : p) {
    out += first_block ? "{" : ",{";
    bool first = true;
    for (int x : b) {
      out += (first ? "" : ",") + std::to_string(x + 1);
      first = false;
    }
    out += "}";
    first_block = false;
  }
  return out + "}";
}

/// Violation tallies keyed by claim id, from the reference side.
using Tally = std::map<std::string, std::uint64_t>;

/// Runs the library claims with the given ids and compares counts.
void compare_with_library(const Tally &oracle, std::size_t n, Verdict &v,
                          oracle::ScopeOverride scope = oracle::ScopeOverride::natural) {
  std::ostringstream failing, mismatched;
  std::size_t failing_count = 0;
  if (!v.detail.empty() && v.detail.back() != ' ')
    v.detail += "; ";
  for (const auto &[id, count] : oracle) {
    auto claims = oracle::select_claims({id});
    if (claims.size() != 1 || claims[0].id != id) {
      mismatched << " missing:" << id;
      continue;
    }
    auto r = oracle::run_claim(claims[0], n, scope);
    if (r.violation_count != count)
      mismatched << " " << id << "(oracle " << count << ", library " << r.violation_count
                 << ")";
    if (count > 0) {
      if (failing_count < 12)
        failing << (failing_count ? ", " : "") << id << "=" << count;
      ++failing_count;
    }
  }
  if (failing_count) {
    v.pass = false;
    v.detail += std::to_string(failing_count) + " of " + std::to_string(oracle.size()) +
                " statements violated [" + failing.str() +
                (failing_count > 12 ? ", ..." : "") + "]";
  } else {
    v.detail += std::to_string(oracle.size()) + " statements, zero violations";
  }
  if (!mismatched.str().empty()) {
    v.pass = false;
    v.detail += "; oracle/library disagreement:" + mismatched.str();
  }
}

/// Tables over all nonempty granules on subsets of an n-set.
struct Universe4 {
  int n;
  std::vector<ref::Partition> gs;
  std::map<ref::Partition, std::size_t> index;
  std::vector<std::vector<char>> coarser; // coarser[b][a]: b ⪰ a
  std::vector<std::vector<ref::Partition>> meet, join;
  std::vector<std::vector<ref::Frac>> mass;
  std::vector<std::vector<std::vector<ref::Frac>>> g; // g[k][b][a]

  explicit Universe4(int n_) : n(n_), gs(ref::all_granules(n_)) {
    const std::size_t m = gs.size();
    for (std::size_t i = 0; i < m; ++i)
      index[gs[i]] = i;
    coarser.assign(m, std::vector<char>(m));
    meet.assign(m, std::vector<ref::Partition>(m));
    join.assign(m, std::vector<ref::Partition>(m));
    mass.assign(m, std::vector<ref::Frac>(m));
    g.assign(6, std::vector<std::vector<ref::Frac>>(m, std::vector<ref::Frac>(m)));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        coarser[b][a] = ref::coarser(gs[b], gs[a]);
        meet[a][b] = ref::meet(gs[a], gs[b]);
        join[a][b] = ref::quotient_join(gs[a], gs[b]);
        mass[a][b] = ref::mass(gs[a], gs[b], n);
        for (int k = 1; k <= 5; ++k)
          g[k][b][a] = ref::G(k, gs[b], gs[a], n);
      }
  }

  ref::Frac G(int k, std::size_t b, std::size_t a) const { return g[k][b][a]; }
  ref::Frac F(int k, std::size_t b, std::size_t a) const { return mass[a][b] - g[k][b][a]; }
};

// Criterion 1 -------------------------------------------------------------

Verdict axiom_suite(const Universe4 &w) {
  Tally tally;
  const std::size_t m = w.gs.size();
  for (int k = 1; k <= 5; ++k) {
    const std::string ks = "sh" + std::to_string(k);
    auto &a1 = tally["axiom/G/" + ks + "/A1"];
    auto &a2 = tally["axiom/G/" + ks + "/A2"];
    auto &a1p = tally["axiom/F/" + ks + "/A1'"];
    auto &a2p = tally["axiom/F/" + ks + "/A2'"];
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const bool coarser = w.coarser[b][a];
        const bool empty_meet = w.meet[a][b].empty();
        const auto gv = w.G(k, b, a), fv = w.F(k, b, a);
        a1 += (gv == w.mass[a][b]) != coarser;
        a2 += (gv == ref::Frac(0)) != empty_meet;
        a1p += coarser && !(fv == ref::Frac(0));
        a2p += (fv == w.mass[a][b]) != empty_meet;
      }
    for (int number = 3; number <= 12; ++number) {
      const std::string num = std::to_string(number);
      auto &plain = tally["axiom/G/" + ks + "/A" + num];
      auto &primed = tally["axiom/F/" + ks + "/A" + num + "'"];
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          for (std::size_t c = 0; c < m; ++c) {
            if (!w.coarser[c][b])
              continue;
            bool premise = true;
            switch ((number - 3) / 2) {
            case 1:
              premise = w.meet[b][a] == w.meet[c][a];
              break;
            case 2:
              premise = w.join[b][a] == w.join[c][a];
              break;
            case 3:
              premise = w.coarser[b][a];
              break;
            case 4:
              premise = w.coarser[a][c];
              break;
            }
            if (!premise)
              continue;
            if (number % 2 == 1) {
              plain += !(w.G(k, b, a) <= w.G(k, c, a));
              primed += !(w.F(k, c, a) <= w.F(k, b, a));
            } else {
              plain += !(w.G(k, a, c) <= w.G(k, a, b));
              primed += !(w.F(k, a, b) <= w.F(k, a, c));
            }
          }
    }
  }
  Verdict v;
  compare_with_library(tally, static_cast<std::size_t>(w.n), v);
  return v;
}

// Criterion 2 -------------------------------------------------------------

Verdict mass_bound(const Universe4 &w) {
  const auto u = Universe::numbered(static_cast<std::size_t>(w.n));
  std::uint64_t violations = 0, pairs = 0;
  for (const auto &a : w.gs)
    for (const auto &b : w.gs) {
      ref::Frac total(0);
      for (const auto &ai : a)
        for (const auto &bj : b)
          total = total + ref::Frac(static_cast<std::int64_t>(ref::inter(ai, bj).size()), w.n);
      const auto lib = prob_distribution(ref::to_granule(a, u), ref::to_granule(b, u)).total();
      ++pairs;
      violations += !(total <= ref::mass(a, b, w.n)) || lib != Rational(total.num) / total.den;
    }
  Verdict v;
  v.detail = std::to_string(pairs) + " pairs, " + std::to_string(violations) + " violations";
  v.pass = violations == 0;
  Tally t{{"mass-bound", 0}};
  compare_with_library(t, static_cast<std::size_t>(w.n), v);
  return v;
}

// Criterion 3 -------------------------------------------------------------

Verdict independence(const Universe4 &w) {
  Tally tally;
  std::string example;
  const std::size_t m = w.gs.size();
  for (int k = 1; k <= 5; ++k) {
    const std::string ks = "sh" + std::to_string(k);
    auto &g = tally["independence/G/" + ks];
    auto &f = tally["independence/F/" + ks];
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const bool disjoint = ref::inter(ref::carrier(w.gs[a]), ref::carrier(w.gs[b])).empty();
        const bool g_zero = w.G(k, b, a) == ref::Frac(0) && w.G(k, a, b) == ref::Frac(0);
        const bool f_full = w.F(k, b, a) == w.mass[a][b] && w.F(k, a, b) == w.mass[a][b];
        if (g_zero != disjoint && example.empty())
          example = ks + " A=" + text(w.gs[a]) + " B=" + text(w.gs[b]) +
                    " G(B|A)=" + w.G(k, b, a).str() + " G(A|B)=" + w.G(k, a, b).str();
        g += g_zero != disjoint;
        f += f_full != disjoint;
      }
  }
  Verdict v;
  compare_with_library(tally, static_cast<std::size_t>(w.n), v);
  if (!example.empty())
    v.detail += "; e.g. " + example;
  return v;
}

// Criterion 4 -------------------------------------------------------------

Verdict entropy_theorems(const Universe4 &w) {
  Tally tally;
  const double log_n = std::log2(static_cast<double>(w.n));
  const std::size_t m = w.gs.size();
  for (int k = 1; k <= 5; ++k) {
    const std::string ks = "sh" + std::to_string(k);
    auto &hp_forward = tally["entropy-coarser/H'/" + ks];
    auto &h_forward = tally["entropy-coarser/H/" + ks];
    auto &hp_quotient = tally["entropy-quotient-refinement/H'/" + ks];
    auto &h_quotient = tally["entropy-quotient-refinement/H/" + ks];
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const double hp = ref::H_prime(k, w.gs[b], w.gs[a], w.n);
        const double h = ref::H(k, w.gs[b], w.gs[a], w.n);
        const bool coarser = w.coarser[b][a];
        if (coarser) {
          hp_forward += std::abs(hp) > kTol;
          h_forward += std::abs(h - w.mass[a][b].to_double() * log_n) > kTol;
        }
        const bool quotient = ref::carrier(w.gs[a]).size() == static_cast<std::size_t>(w.n) &&
                              ref::carrier(w.gs[b]).size() == static_cast<std::size_t>(w.n);
        if (quotient) {
          hp_quotient += coarser != (std::abs(hp) <= kTol);
          h_quotient += coarser != (std::abs(h - log_n) <= kTol);
        }
      }
  }
  Verdict v;
  compare_with_library(tally, static_cast<std::size_t>(w.n), v);

  // Shannon reduction for every quotient granule up to n = 5.
  std::uint64_t shannon_bad = 0, shannon_cases = 0;
  for (int n = 1; n <= 5; ++n) {
    auto u = Universe::numbered(static_cast<std::size_t>(n));
    const ref::Partition whole{ref::range(n)};
    for (const auto &p : ref::partitions(ref::range(n))) {
      const double want = ref::shannon(p, n);
      const double lib = co_entropy(MeasureKind::sh2, ref::to_granule(p, u)).value;
      const double oracle = ref::H_prime(2, p, whole, n);
      shannon_bad += std::abs(lib - want) > kTol || std::abs(oracle - want) > kTol;
      ++shannon_cases;
    }
  }
  v.detail += "; Shannon reduction " + std::to_string(shannon_cases) + " quotient granules, " +
              std::to_string(shannon_bad) + " mismatches";
  if (shannon_bad)
    v.pass = false;
  return v;
}

// Criterion 5 -------------------------------------------------------------

Verdict merge_steps(const Universe4 &w) {
  Tally tally;
  std::string example;
  const std::size_t m = w.gs.size();
  for (int k = 1; k <= 5; ++k) {
    const std::string ks = "sh" + std::to_string(k);
    auto &tg = tally["merge/G/" + ks];
    auto &th = tally["merge/H/" + ks];
    auto &thp = tally["merge/H'/" + ks];
    for (std::size_t bi = 0; bi < m; ++bi) {
      std::vector<ref::Set> blocks(w.gs[bi].begin(), w.gs[bi].end());
      for (std::size_t x = 0; x < blocks.size(); ++x)
        for (std::size_t y = x + 1; y < blocks.size(); ++y) {
          ref::Partition merged;
          for (std::size_t z = 0; z < blocks.size(); ++z)
            if (z != x && z != y)
              merged.insert(blocks[z]);
          merged.insert(ref::unite(blocks[x], blocks[y]));
          const std::size_t ci = w.index.at(merged);
          for (std::size_t a = 0; a < m; ++a) {
            const bool g_ok = w.G(k, bi, a) <= w.G(k, ci, a) && w.G(k, a, ci) <= w.G(k, a, bi);
            const auto &A = w.gs[a], &B = w.gs[bi], &C = w.gs[ci];
            const bool h_ok = ref::H(k, B, A, w.n) <= ref::H(k, C, A, w.n) + kTol &&
                              ref::H(k, A, C, w.n) <= ref::H(k, A, B, w.n) + kTol;
            const bool hp_ok = ref::H_prime(k, C, A, w.n) <= ref::H_prime(k, B, A, w.n) + kTol &&
                               ref::H_prime(k, A, B, w.n) <= ref::H_prime(k, A, C, w.n) + kTol;
            if (!g_ok && example.empty())
              example = ks + " A=" + text(A) + " B=" + text(B) + " C=" + text(C) +
                        " G(B|A)=" + w.G(k, bi, a).str() + " G(C|A)=" + w.G(k, ci, a).str() +
                        " G(A|B)=" + w.G(k, a, bi).str() + " G(A|C)=" + w.G(k, a, ci).str();
            tg += !g_ok;
            th += !h_ok;
            thp += !hp_ok;
          }
        }
    }
  }
  Verdict v;
  compare_with_library(tally, static_cast<std::size_t>(w.n), v);
  if (!example.empty())
    v.detail += "; e.g. " + example;
  return v;
}

// Criterion 6 -------------------------------------------------------------

Verdict worked_values() {
  auto u = Universe::numbered(4);
  const ref::Partition A{{0, 1}, {2, 3}}, B{{0, 1, 2}, {3}};
  const auto a = ref::to_granule(A, u), b = ref::to_granule(B, u);
  std::ostringstream out;
  bool ok = true;
  auto exact = [&](const char *name, const ref::Frac &oracle, const Rational &lib,
                   const ref::Frac &stated) {
    const bool good = oracle == stated && lib == Rational(stated.num) / stated.den;
    ok = ok && good;
    out << name << "=" << to_fraction_string(lib) << (good ? "" : "(!)") << " ";
  };
  auto approx = [&](const char *name, double oracle, double lib, double stated) {
    const bool good = std::abs(oracle - stated) <= kTol && std::abs(lib - stated) <= kTol;
    ok = ok && good;
    out << name << "=" << lib << (good ? "" : "(!)") << " ";
  };
  exact("G2", ref::G(2, B, A, 4), conditional_granularity(MeasureKind::sh2, b, a).value(),
        ref::Frac(3, 4));
  exact("G1", ref::G(1, B, A, 4), conditional_granularity(MeasureKind::sh1, b, a).value(),
        ref::Frac(7, 8));
  exact("F2", ref::F(2, B, A, 4), conditional_fineness(MeasureKind::sh2, b, a).value(),
        ref::Frac(1, 4));
  approx("H'2", ref::H_prime(2, B, A, 4),
         conditional_fineness_entropy(MeasureKind::sh2, b, a).value, 0.5);
  approx("H2", ref::H(2, B, A, 4), conditional_granularity_entropy(MeasureKind::sh2, b, a).value,
         1.5);
  return {ok, out.str()};
}

// Criterion 7 -------------------------------------------------------------

Verdict pawlak() {
  std::uint64_t cases = 0, bad = 0;
  for (int n = 1; n <= 4; ++n) {
    auto u = Universe::numbered(static_cast<std::size_t>(n));
    auto parts = ref::partitions(ref::range(n));
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i; j < parts.size(); ++j) {
        std::vector<Attribute> attrs{{"a", ref::to_granule(parts[i], u)}};
        if (j != i)
          attrs.push_back({"b", ref::to_granule(parts[j], u)});
        InformationSystem sys(u, attrs);
        const ref::Partition p = ref::meet(parts[i], parts[j]);
        for (auto mode : {DefinableMode::paper_literal, DefinableMode::attribute_generated}) {
          auto space = make_micro_space(sys, mode);
          for (int mask = 0; mask < (1 << n); ++mask) {
            ref::Set target;
            for (int x = 0; x < n; ++x)
              if (mask & (1 << x))
                target.insert(x);
            ref::Set lower, upper;
            for (const auto &block : p) {
              if (ref::includes(target, block))
                lower.insert(block.begin(), block.end());
              if (!ref::inter(target, block).empty())
                upper.insert(block.begin(), block.end());
            }
            auto got = approximate_set(ElementSet(static_cast<std::uint64_t>(mask)), space);
            auto as_set = [](ElementSet s) {
              ref::Set out;
              for (auto x : s.indices())
                out.insert(static_cast<int>(x));
              return out;
            };
            ++cases;
            bad += as_set(got.lower) != lower || !got.upper || as_set(*got.upper) != upper;
          }
        }
      }
  }
  Verdict v{bad == 0, std::to_string(cases) + " (system, mode, subset) cases, " +
                          std::to_string(bad) + " mismatches"};
  compare_with_library({{"rough/pawlak", 0}}, 4, v);
  return v;
}

// Criterion 8 -------------------------------------------------------------

/// Greatest member of the family below t and least member above it, by a
/// plain scan with the supplied order.
template <class T, class Leq>
std::pair<std::optional<T>, std::optional<T>> scan(const T &t, const std::vector<T> &family,
                                                   Leq leq) {
  std::optional<T> below, above;
  for (const auto &c : family) {
    if (leq(c, t)) {
      bool top = true;
      for (const auto &d : family)
        if (leq(d, t) && !leq(d, c))
          top = false;
      if (top)
        below = c;
    }
    if (leq(t, c)) {
      bool bottom = true;
      for (const auto &d : family)
        if (leq(t, d) && !leq(c, d))
          bottom = false;
      if (bottom)
        above = c;
    }
  }
  return {below, above};
}

/// d₀ from scratch: unions of base blocks, or the ∪/∩ closure of every
/// attribute block; ∅ always included.
std::vector<ref::Set> reference_definables(const std::vector<ref::Partition> &attrs,
                                           bool generated) {
  std::set<ref::Set> family{ref::Set{}};
  if (!generated) {
    ref::Partition p = attrs[0];
    for (std::size_t i = 1; i < attrs.size(); ++i)
      p = ref::meet(p, attrs[i]);
    std::vector<ref::Set> blocks(p.begin(), p.end());
    for (std::size_t mask = 1; mask < (std::size_t{1} << blocks.size()); ++mask) {
      ref::Set s;
      for (std::size_t i = 0; i < blocks.size(); ++i)
        if (mask & (std::size_t{1} << i))
          s.insert(blocks[i].begin(), blocks[i].end());
      family.insert(s);
    }
  } else {
    for (const auto &a : attrs)
      family.insert(a.begin(), a.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<ref::Set> items(family.begin(), family.end());
      for (const auto &x : items)
        for (const auto &y : items) {
          grew |= family.insert(ref::unite(x, y)).second;
          grew |= family.insert(ref::inter(x, y)).second;
        }
    }
  }
  return {family.begin(), family.end()};
}

Verdict lattice_bounds() {
  std::uint64_t micro_cases = 0, micro_bad = 0, macro_cases = 0, macro_bad = 0;
  const int n = 4;
  auto u = Universe::numbered(n);
  auto gs = ref::all_granules(n);
  auto as_set = [](ElementSet s) {
    ref::Set out;
    for (auto x : s.indices())
      out.insert(static_cast<int>(x));
    return out;
  };
  auto subset = [](const ref::Set &x, const ref::Set &y) { return ref::includes(y, x); };
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i; j < gs.size(); ++j) {
      std::vector<ref::Partition> attrs{gs[i]};
      std::vector<Attribute> lib_attrs{{"a", ref::to_granule(gs[i], u)}};
      if (j != i) {
        attrs.push_back(gs[j]);
        lib_attrs.push_back({"b", ref::to_granule(gs[j], u)});
      }
      InformationSystem sys(u, lib_attrs);
      for (bool generated : {false, true}) {
        auto family = reference_definables(attrs, generated);
        auto space = make_micro_space(sys, generated ? DefinableMode::attribute_generated
                                                     : DefinableMode::paper_literal);
        for (int mask = 0; mask < (1 << n); ++mask) {
          ref::Set target;
          for (int x = 0; x < n; ++x)
            if (mask & (1 << x))
              target.insert(x);
          auto [below, above] = scan(target, family, subset);
          auto got = approximate_set(ElementSet(static_cast<std::uint64_t>(mask)), space);
          ++micro_cases;
          const bool upper_ok =
              above.has_value() == got.upper.has_value() && (!above || as_set(*got.upper) == *above);
          micro_bad += !below || as_set(got.lower) != *below || !upper_ok;
        }
      }
    }

  // Macro: every granule with at most four blocks as P, every granule as target.
  auto targets = gs;
  targets.insert(targets.begin(), ref::Partition{});
  auto finer = [](const ref::Partition &x, const ref::Partition &y) { return ref::coarser(y, x); };
  for (const auto &p : gs) {
    if (p.size() > 4)
      continue;
    std::vector<ref::Set> blocks(p.begin(), p.end());
    std::set<int> ids;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      ids.insert(static_cast<int>(b));
    std::vector<ref::Partition> family;
    for (const auto &grouping : ref::partitions(ids)) {
      ref::Partition q;
      for (const auto &group : grouping) {
        ref::Set merged;
        for (int b : group)
          merged.insert(blocks[static_cast<std::size_t>(b)].begin(),
                        blocks[static_cast<std::size_t>(b)].end());
        q.insert(merged);
      }
      family.push_back(q);
    }
    InformationSystem sys(u, {{"p", ref::to_granule(p, u)}});
    for (const auto &t : targets) {
      auto [below, above] = scan(t, family, finer);
      auto got = granule_bounds(ref::to_granule(t, u), sys);
      auto same = [&](const std::optional<Granule> &g, const std::optional<ref::Partition> &r) {
        return g.has_value() == r.has_value() && (!g || ref::from(*g) == *r);
      };
      bool approx_ok;
      try {
        auto a = approximate_granule(ref::to_granule(t, u), sys);
        approx_ok = below && above && ref::from(a.lower) == *below && ref::from(a.upper) == *above;
      } catch (const NoBoundError &) {
        approx_ok = !below || !above;
      }
      ++macro_cases;
      macro_bad += !same(got.lower, below) || !same(got.upper, above) || !approx_ok;
    }
  }
  Verdict v{micro_bad == 0 && macro_bad == 0,
            "micro " + std::to_string(micro_cases) + " cases, " + std::to_string(micro_bad) +
                " mismatches; macro " + std::to_string(macro_cases) + " cases, " +
                std::to_string(macro_bad) + " mismatches"};
  compare_with_library({{"rough/micro-bounds", 0}, {"rough/macro-bounds", 0}}, 4, v);
  return v;
}

// Criterion 9 -------------------------------------------------------------

Verdict discrepancy_probes() {
  std::ostringstream out;
  bool ok = true;
  auto u = Universe::numbered(4);
  std::vector<std::string> ids;
  for (int k = 1; k <= 5; ++k)
    ids.push_back("refinement-fineness-printed/sh" + std::to_string(k));
  ids.push_back("rough/shortcut-agreement");
  for (const auto &id : ids) {
    auto claims = oracle::select_claims({id});
    if (claims.size() != 1) {
      ok = false;
      out << id << " missing; ";
      continue;
    }
    auto r = oracle::run_claim(claims[0], 4);
    const bool documented = r.expectation == oracle::Expectation::expected_fail &&
                            r.status() == oracle::Status::flagged && !r.violations.empty();
    // Re-derive the first certificate with the reference oracle.
    bool confirmed = false;
    if (documented && claims[0].arity != oracle::Arity::custom) {
      const auto &c = r.violations.front();
      const auto A = ref::from(parse_granule(c.operands.at(0).second, u));
      const auto B = ref::from(parse_granule(c.operands.at(1).second, u));
      const int k = id.back() - '0';
      const bool finer = ref::coarser(B, A);
      const bool printed = ref::F(k, B, A, 4) == ref::Frac(1) - ref::mass(A, B, 4);
      confirmed = finer != printed;
    } else if (documented) {
      const auto &c = r.violations.front();
      const auto P = ref::from(parse_granule(c.operands.at(0).second, u));
      const auto A = ref::from(parse_granule(c.operands.at(1).second, u));
      InformationSystem sys(u, {{"p", ref::to_granule(P, u)}});
      auto bounds = granule_bounds(ref::to_granule(A, u), sys);
      confirmed = !bounds.lower || ref::from(*bounds.lower) != ref::meet(A, P) || !bounds.upper ||
                  ref::from(*bounds.upper) != ref::quotient_join(A, P);
    }
    ok = ok && documented && confirmed;
    out << id << ": " << r.violation_count << " counterexamples"
        << (documented && confirmed ? "" : " (not documented)") << "; ";
  }
  return {ok, out.str()};
}

// Criterion 10 ------------------------------------------------------------

Verdict enumeration_counts() {
  const std::uint64_t bells[] = {1, 2, 5, 15, 52};
  const std::uint64_t totals[] = {1, 4, 14, 51, 202};
  bool ok = true;
  std::ostringstream out;
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t sum = 0;
    for (int k = 1; k <= n; ++k)
      sum += ref::choose(n, k) * ref::bell(k);
    const auto q = oracle::enumerate_granules(
                       {static_cast<std::size_t>(n), oracle::Subject::quotient_granules, false})
                       .size();
    const auto all =
        oracle::enumerate_granules({static_cast<std::size_t>(n), oracle::Subject::granules, false})
            .size();
    const bool good = q == bells[n - 1] && ref::bell(n) == bells[n - 1] && sum == totals[n - 1] &&
                      all == totals[n - 1] &&
                      ref::all_granules(n).size() == totals[n - 1];
    ok = ok && good;
    out << "n=" << n << ": " << q << "/" << all << (good ? "" : "(!)") << " ";
  }
  return {ok, out.str()};
}

} // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const Universe4 w(4);
  run(1, "axiom suite, all kinds, granules on all subsets, n=4", [&] { return axiom_suite(w); });
  run(2, "sum of meet probabilities <= m/n, n=4", [&] { return mass_bound(w); });
  run(3, "independence iff G = 0 and iff F = m/n, n=4", [&] { return independence(w); });
  run(4, "entropy coarse-fine theorems and Shannon reduction", [&] {
    return entropy_theorems(w);
  });
  run(5, "single-merge refinement steps for G, H, H', n=4", [&] { return merge_steps(w); });
  run(6, "worked values on the four-element fixture", worked_values);
  run(7, "set approximations equal Pawlak approximations on complete systems, n<=4", pawlak);
  run(8, "approximations equal brute-force lattice bounds", lattice_bounds);
  run(9, "documented discrepancy probes produce certificates", discrepancy_probes);
  run(10, "enumeration counts, n=1..5", enumeration_counts);
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 10 criteria failed, %.2f s\n", failures, total);
  return failures == 0 ? 0 : 1;
}
