#include "gran/oracle/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "gran/errors.hpp"
#include "gran/operations.hpp"

namespace gran::oracle {

// ---------------------------------------------------------------------------
// Names

std::string_view to_string(Target t) {
  switch (t) {
  case Target::G:
    return "G";
  case Target::F:
    return "F";
  case Target::H:
    return "H";
  case Target::H_prime:
    return "H'";
  }
  return "G";
}

std::optional<Target> parse_target(std::string_view text) {
  if (text == "G")
    return Target::G;
  if (text == "F")
    return Target::F;
  if (text == "H")
    return Target::H;
  if (text == "H'" || text == "Hp" || text == "H_prime")
    return Target::H_prime;
  return std::nullopt;
}

bool is_increasing(Target t) { return t == Target::G || t == Target::H; }

std::string AxiomId::to_string() const {
  return "A" + std::to_string(number) + (primed ? "'" : "");
}

std::optional<AxiomId> AxiomId::parse(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'A' && text[0] != 'a'))
    return std::nullopt;
  text.remove_prefix(1);
  AxiomId id;
  if (!text.empty() && text.back() == '\'') {
    id.primed = true;
    text.remove_suffix(1);
  }
  if (text.empty() || text.size() > 2)
    return std::nullopt;
  int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      return std::nullopt;
    value = value * 10 + (c - '0');
  }
  if (value < 1 || value > 12)
    return std::nullopt;
  id.number = value;
  return id;
}

std::string_view to_string(Expectation e) {
  switch (e) {
  case Expectation::must_pass:
    return "must-pass";
  case Expectation::expected_fail:
    return "expected-fail";
  case Expectation::informational:
    return "informational";
  }
  return "must-pass";
}

std::string_view to_string(Status s) {
  switch (s) {
  case Status::pass:
    return "pass";
  case Status::fail:
    return "fail";
  case Status::flagged:
    return "flagged";
  }
  return "fail";
}

std::string_view to_string(ScopeOverride s) {
  return s == ScopeOverride::natural ? "natural" : "quotient";
}

std::optional<ScopeOverride> parse_scope(std::string_view text) {
  if (text == "natural" || text == "subsets")
    return ScopeOverride::natural;
  if (text == "quotient")
    return ScopeOverride::quotient;
  return std::nullopt;
}

Status CheckReport::status() const {
  if (violation_count == 0)
    return Status::pass;
  return expectation == Expectation::must_pass ? Status::fail : Status::flagged;
}

// ---------------------------------------------------------------------------
// EvalContext

struct EvalContext::Impl {
  std::map<std::vector<std::uint64_t>, std::size_t> ids;
  std::unordered_map<std::uint64_t, Rational> g;
  std::unordered_map<std::uint64_t, EntropyValue> h_prime;
  std::unordered_map<std::uint64_t, double> h;
  std::unordered_map<std::uint64_t, Rational> mass;
  std::unordered_map<std::uint64_t, bool> coarser;
  std::unordered_map<std::uint64_t, std::size_t> meet;
  std::unordered_map<std::uint64_t, std::size_t> join;
};

EvalContext::EvalContext(UniversePtr universe, double log_base)
    : universe_(std::move(universe)), log_base_(log_base),
      log_n_(std::log(static_cast<double>(universe_->size())) / std::log(log_base)),
      impl_(std::make_shared<Impl>()) {}

std::uint64_t EvalContext::key(std::size_t kind, std::size_t b, std::size_t a) {
  return (static_cast<std::uint64_t>(kind) << 48) | (static_cast<std::uint64_t>(b) << 24) |
         static_cast<std::uint64_t>(a);
}

std::size_t EvalContext::intern(const Granule &g) {
  if (!same_universe(g.universe(), universe_))
    throw UniverseMismatchError();
  std::vector<std::uint64_t> k;
  k.reserve(g.block_count());
  for (auto b : g.blocks())
    k.push_back(b.bits());
  auto [it, fresh] = impl_->ids.emplace(std::move(k), granules_.size());
  if (fresh)
    granules_.push_back(g);
  return it->second;
}

std::string EvalContext::text(std::size_t id) const { return to_string(granules_[id]); }

const Rational &EvalContext::G(MeasureKind k, std::size_t b, std::size_t a) {
  auto kk = key(static_cast<std::size_t>(k), b, a);
  auto it = impl_->g.find(kk);
  if (it == impl_->g.end())
    it = impl_->g.emplace(kk, conditional_granularity(k, granules_[b], granules_[a]).value())
             .first;
  return it->second;
}

Rational EvalContext::F(MeasureKind k, std::size_t b, std::size_t a) {
  return mass(b, a) - G(k, b, a);
}

const EntropyValue &EvalContext::H_prime(MeasureKind k, std::size_t b, std::size_t a) {
  auto kk = key(static_cast<std::size_t>(k), b, a);
  auto it = impl_->h_prime.find(kk);
  if (it == impl_->h_prime.end())
    it = impl_->h_prime
             .emplace(kk, conditional_fineness_entropy(k, granules_[b], granules_[a], log_base_))
             .first;
  return it->second;
}

double EvalContext::H(MeasureKind k, std::size_t b, std::size_t a) {
  auto kk = key(static_cast<std::size_t>(k), b, a);
  auto it = impl_->h.find(kk);
  if (it == impl_->h.end())
    it = impl_->h
             .emplace(kk, conditional_granularity_entropy(k, granules_[b], granules_[a],
                                                          log_base_)
                              .value)
             .first;
  return it->second;
}

const Rational &EvalContext::mass(std::size_t b, std::size_t a) {
  auto kk = key(0, b, a);
  auto it = impl_->mass.find(kk);
  if (it == impl_->mass.end())
    it = impl_->mass.emplace(kk, mass_ratio(granules_[a], granules_[b])).first;
  return it->second;
}

Rational EvalContext::mass_total(std::size_t b, std::size_t a) {
  return prob_distribution(granules_[a], granules_[b]).total();
}

bool EvalContext::coarser(std::size_t b, std::size_t a) {
  auto kk = key(0, b, a);
  auto it = impl_->coarser.find(kk);
  if (it == impl_->coarser.end())
    it = impl_->coarser.emplace(kk, is_finer(granules_[a], granules_[b])).first;
  return it->second;
}

bool EvalContext::independent(std::size_t a, std::size_t b) {
  return are_independent(granules_[a], granules_[b]);
}

std::size_t EvalContext::meet_id(std::size_t a, std::size_t b) {
  auto kk = key(0, std::min(a, b), std::max(a, b));
  auto it = impl_->meet.find(kk);
  if (it != impl_->meet.end())
    return it->second;
  auto id = intern(meet(granules_[a], granules_[b]));
  impl_->meet.emplace(kk, id);
  return id;
}

std::size_t EvalContext::join_id(std::size_t a, std::size_t b) {
  auto kk = key(0, std::min(a, b), std::max(a, b));
  auto it = impl_->join.find(kk);
  if (it != impl_->join.end())
    return it->second;
  auto id = intern(quotient_join(granules_[a], granules_[b]));
  impl_->join.emplace(kk, id);
  return id;
}

// ---------------------------------------------------------------------------
// Claim construction helpers

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// A measure value that is either exact or an entropy compared with tolerance.
struct Value {
  bool exact = true;
  Rational r;
  double d = 0.0;
  bool clamped = false;

  std::string str() const { return exact ? to_fraction_string(r) : fmt_double(d); }
};

bool le(const Value &x, const Value &y) {
  return x.exact ? x.r <= y.r : x.d <= y.d + kEntropyTolerance;
}

bool eq(const Value &x, const Value &y) {
  return x.exact ? x.r == y.r : std::abs(x.d - y.d) <= kEntropyTolerance;
}

Value exact(Rational r) { return Value{true, std::move(r), 0.0, false}; }
Value approx(double d, bool clamped = false) { return Value{false, 0, d, clamped}; }

/// T_k(B|A) for the given target.
Value measure(EvalContext &ctx, Target t, MeasureKind k, std::size_t b, std::size_t a) {
  switch (t) {
  case Target::G:
    return exact(ctx.G(k, b, a));
  case Target::F:
    return exact(ctx.F(k, b, a));
  case Target::H: {
    const auto &hp = ctx.H_prime(k, b, a);
    return approx(ctx.H(k, b, a), hp.clamped);
  }
  case Target::H_prime: {
    const auto &hp = ctx.H_prime(k, b, a);
    return approx(hp.value, hp.clamped);
  }
  }
  return exact(0);
}

/// The maximum of the measure for the pair: m/n, or (m/n) log n.
Value top(EvalContext &ctx, Target t, std::size_t b, std::size_t a) {
  if (t == Target::G || t == Target::F)
    return exact(ctx.mass(b, a));
  return approx(to_double(ctx.mass(b, a)) * ctx.log_n());
}

Value zero(Target t) { return (t == Target::G || t == Target::F) ? exact(0) : approx(0.0); }

std::string label(Target t, const char *lhs, const char *rhs) {
  return std::string(to_string(t)) + "(" + lhs + "|" + rhs + ")";
}

std::string flag(bool b) { return b ? "true" : "false"; }

Evaluation verdict(bool holds, bool clamped = false) {
  Evaluation e;
  e.outcome = holds ? Outcome::holds : Outcome::violated;
  e.clamped = clamped;
  return e;
}

Claim make_claim(std::string id, std::string description, Expectation expectation, Arity arity,
                 Predicate predicate, Domain domain = Domain::granules) {
  Claim c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.expectation = expectation;
  c.arity = arity;
  switch (arity) {
  case Arity::single:
    c.operand_names = {"A"};
    c.domains = {domain};
    break;
  case Arity::pair:
    c.operand_names = {"A", "B"};
    c.domains = {domain, domain};
    break;
  case Arity::triple:
  case Arity::merge:
    c.operand_names = {"A", "B", "C"};
    c.domains = {domain, domain, domain};
    break;
  case Arity::custom:
    break;
  }
  c.predicate = std::move(predicate);
  return c;
}

std::string claim_prefix(Target t, MeasureKind k) {
  return std::string(to_string(t)) + "/" + std::string(to_string(k));
}

// Premise of the triple axioms beyond C ⪰ B, by axiom pair (3/4, 5/6, ...).
bool triple_premise(EvalContext &ctx, int number, std::size_t a, std::size_t b, std::size_t c) {
  switch ((number - 3) / 2) {
  case 0: // A3, A4
    return true;
  case 1: // A5, A6: B ∧ A = C ∧ A
    return ctx.meet_id(b, a) == ctx.meet_id(c, a);
  case 2: // A7, A8: B ∨_t A = C ∨_t A
    return ctx.join_id(b, a) == ctx.join_id(c, a);
  case 3: // A9, A10: C ⪰ B ⪰ A
    return ctx.coarser(b, a);
  case 4: // A11, A12: A ⪰ C ⪰ B
    return ctx.coarser(a, c);
  }
  return false;
}

/// Conclusion of a triple axiom: an inequality between two measure values.
/// Odd numbers compare T(B|A) with T(C|A); even ones T(A|C) with T(A|B).
/// Unprimed forms increase toward the coarser operand, primed ones decrease.
struct TripleConclusion {
  Value lhs, rhs;
  std::string lhs_label, rhs_label;
};

TripleConclusion triple_conclusion(EvalContext &ctx, AxiomId ax, Target t, MeasureKind k,
                                   std::size_t a, std::size_t b, std::size_t c) {
  const bool odd = ax.number % 2 == 1;
  if (odd) {
    Value vb = measure(ctx, t, k, b, a), vc = measure(ctx, t, k, c, a);
    if (!ax.primed)
      return {vb, vc, label(t, "B", "A"), label(t, "C", "A")};
    return {vc, vb, label(t, "C", "A"), label(t, "B", "A")};
  }
  Value vac = measure(ctx, t, k, a, c), vab = measure(ctx, t, k, a, b);
  if (!ax.primed)
    return {vac, vab, label(t, "A", "C"), label(t, "A", "B")};
  return {vab, vac, label(t, "A", "B"), label(t, "A", "C")};
}

std::string triple_premise_text(int number) {
  switch ((number - 3) / 2) {
  case 0:
    return "C ⪰ B";
  case 1:
    return "C ⪰ B and B ∧ A = C ∧ A";
  case 2:
    return "C ⪰ B and B ∨t A = C ∨t A";
  case 3:
    return "C ⪰ B ⪰ A";
  case 4:
    return "A ⪰ C ⪰ B";
  }
  return "";
}

Predicate triple_axiom_predicate(AxiomId ax, Target t, MeasureKind k) {
  return [=](EvalContext &ctx, std::span<const std::size_t> ops) {
    const auto a = ops[0], b = ops[1], c = ops[2];
    if (!ctx.coarser(c, b) || !triple_premise(ctx, ax.number, a, b, c))
      return Evaluation{};
    auto concl = triple_conclusion(ctx, ax, t, k, a, b, c);
    auto e = verdict(le(concl.lhs, concl.rhs), concl.lhs.clamped || concl.rhs.clamped);
    if (e.outcome == Outcome::violated)
      e.values = {{concl.lhs_label, concl.lhs.str()}, {concl.rhs_label, concl.rhs.str()}};
    return e;
  };
}

enum class Direction { both, forward, converse };

/// Boundary axioms compare a measure with its top value or zero against a
/// structural condition: B ⪰ A for A1/A1', A ∧ B = ∅ for A2/A2'.
Predicate boundary_predicate(AxiomId ax, Target t, MeasureKind k, Direction dir) {
  return [=](EvalContext &ctx, std::span<const std::size_t> ops) {
    const auto a = ops[0], b = ops[1];
    const Value v = measure(ctx, t, k, b, a);
    // A1 and A2' reach the top value; A1' and A2 reach zero.
    const bool at_top = (ax.number == 1) != ax.primed;
    const Value bound = at_top ? top(ctx, t, b, a) : zero(t);
    const bool reached = eq(v, bound);
    const bool structural =
        ax.number == 1 ? ctx.coarser(b, a) : ctx.granule(ctx.meet_id(a, b)).is_empty();
    bool holds = true;
    switch (dir) {
    case Direction::both:
      holds = reached == structural;
      break;
    case Direction::forward:
      if (!structural)
        return Evaluation{};
      holds = reached;
      break;
    case Direction::converse:
      if (!reached)
        return Evaluation{};
      holds = structural;
      break;
    }
    auto e = verdict(holds, v.clamped);
    if (!holds)
      e.values = {{label(t, "B", "A"), v.str()},
                  {at_top ? "top" : "zero", bound.str()},
                  {ax.number == 1 ? "B ⪰ A" : "A ∧ B = ∅", flag(structural)}};
    return e;
  };
}

std::string boundary_statement(AxiomId ax, Target t, Direction dir) {
  const bool at_top = (ax.number == 1) != ax.primed;
  const std::string value =
      label(t, "B", "A") + " = " +
      (at_top ? (t == Target::G || t == Target::F ? "m/n" : "(m/n) log n") : "0");
  const std::string cond = ax.number == 1 ? "B ⪰ A" : "A ∧ B = ∅";
  switch (dir) {
  case Direction::both:
    return value + " iff " + cond;
  case Direction::forward:
    return cond + " implies " + value;
  case Direction::converse:
    return value + " implies " + cond;
  }
  return "";
}

void check_axiom_form(AxiomId ax, Target t) {
  if (ax.primed == is_increasing(t))
    throw std::invalid_argument("axiom " + ax.to_string() + " does not apply to target " +
                                std::string(to_string(t)));
}

} // namespace

Claim axiom_claim(AxiomId ax, MeasureKind k, Target t) {
  check_axiom_form(ax, t);
  const std::string id = "axiom/" + claim_prefix(t, k) + "/" + ax.to_string();
  if (ax.number <= 2) {
    const bool exact_target = t == Target::G || t == Target::F;
    Direction dir = Direction::both;
    Expectation expectation = Expectation::must_pass;
    if (ax.number == 1 && t == Target::F)
      dir = Direction::forward;
    if (!exact_target) {
      if (ax.number == 1)
        dir = Direction::forward;
      else
        expectation = Expectation::informational; // not claimed for entropies
    }
    return make_claim(id, ax.to_string() + ": " + boundary_statement(ax, t, dir), expectation,
                      Arity::pair, boundary_predicate(ax, t, k, dir));
  }
  auto concl = [&] {
    const bool odd = ax.number % 2 == 1;
    const std::string b_a = label(t, "B", "A"), c_a = label(t, "C", "A");
    const std::string a_c = label(t, "A", "C"), a_b = label(t, "A", "B");
    if (odd)
      return ax.primed ? c_a + " <= " + b_a : b_a + " <= " + c_a;
    return ax.primed ? a_b + " <= " + a_c : a_c + " <= " + a_b;
  }();
  return make_claim(id, ax.to_string() + ": " + triple_premise_text(ax.number) + " implies " + concl,
                    Expectation::must_pass, Arity::triple, triple_axiom_predicate(ax, t, k));
}

namespace {

Claim converse_probe(AxiomId ax, MeasureKind k, Target t) {
  return make_claim("axiom/" + claim_prefix(t, k) + "/" + ax.to_string() + "-converse",
                    ax.to_string() + " converse probe: " +
                        boundary_statement(ax, t, Direction::converse),
                    Expectation::informational, Arity::pair,
                    boundary_predicate(ax, t, k, Direction::converse));
}

std::vector<Claim> axiom_claims() {
  std::vector<Claim> out;
  for (auto t : {Target::G, Target::F, Target::H, Target::H_prime}) {
    for (auto k : kAllMeasureKinds) {
      for (int i = 1; i <= 12; ++i) {
        AxiomId ax{i, !is_increasing(t)};
        out.push_back(axiom_claim(ax, k, t));
        if (i == 1 && t != Target::G)
          out.push_back(converse_probe(ax, k, t));
      }
    }
  }
  return out;
}

// Every weak-axiom violation at a triple must also violate the strong axiom
// (A3 for odd numbers, A4 for even ones) at the same triple.
Claim weak_implication_claim(Target t, MeasureKind k) {
  const bool primed = !is_increasing(t);
  auto pred = [=](EvalContext &ctx, std::span<const std::size_t> ops) {
    const auto a = ops[0], b = ops[1], c = ops[2];
    if (!ctx.coarser(c, b))
      return Evaluation{};
    bool strong_violated[2];
    for (int parity = 0; parity < 2; ++parity) {
      auto concl = triple_conclusion(ctx, AxiomId{3 + parity, primed}, t, k, a, b, c);
      strong_violated[parity] = !le(concl.lhs, concl.rhs);
    }
    for (int number = 5; number <= 12; ++number) {
      if (!triple_premise(ctx, number, a, b, c))
        continue;
      AxiomId ax{number, primed};
      auto concl = triple_conclusion(ctx, ax, t, k, a, b, c);
      if (!le(concl.lhs, concl.rhs) && !strong_violated[(number + 1) % 2]) {
        auto e = verdict(false);
        e.values = {{concl.lhs_label, concl.lhs.str()}, {concl.rhs_label, concl.rhs.str()}};
        e.note = ax.to_string() + " violated without the corresponding strong axiom";
        return e;
      }
    }
    return verdict(true);
  };
  return make_claim("weak-implication/" + claim_prefix(t, k),
                    "every weak monotone axiom violation is also a strong one",
                    Expectation::must_pass, Arity::triple, pred);
}

std::vector<Claim> theorem_claims() {
  std::vector<Claim> out;

  out.push_back(make_claim(
      "mass-bound", "sum of p(a_i ∩ b_j) <= m/n", Expectation::must_pass, Arity::pair,
      [](EvalContext &ctx, std::span<const std::size_t> ops) {
        const auto a = ops[0], b = ops[1];
        const Rational total = ctx.mass_total(b, a);
        auto e = verdict(total <= ctx.mass(b, a));
        if (e.outcome == Outcome::violated)
          e.values = {{"sum p", to_fraction_string(total)},
                      {"m/n", to_fraction_string(ctx.mass(b, a))}};
        return e;
      }));

  for (auto k : kAllMeasureKinds) {
    const std::string ks(to_string(k));

    out.push_back(make_claim(
        "range/" + ks, "0 <= G(B|A) <= 1 and 0 <= F(B|A) <= 1", Expectation::must_pass,
        Arity::pair, [k](EvalContext &ctx, std::span<const std::size_t> ops) {
          const auto a = ops[0], b = ops[1];
          const Rational g = ctx.G(k, b, a), f = ctx.F(k, b, a);
          auto e = verdict(g >= 0 && g <= 1 && f >= 0 && f <= 1);
          if (e.outcome == Outcome::violated)
            e.values = {{"G(B|A)", to_fraction_string(g)}, {"F(B|A)", to_fraction_string(f)}};
          return e;
        }));

    out.push_back(make_claim(
        "independence/G/" + ks, "A, B independent iff G(B|A) = G(A|B) = 0",
        Expectation::must_pass, Arity::pair,
        [k](EvalContext &ctx, std::span<const std::size_t> ops) {
          const auto a = ops[0], b = ops[1];
          const bool ind = ctx.independent(a, b);
          const bool zero = ctx.G(k, b, a) == 0 && ctx.G(k, a, b) == 0;
          auto e = verdict(ind == zero);
          if (e.outcome == Outcome::violated)
            e.values = {{"G(B|A)", to_fraction_string(ctx.G(k, b, a))},
                        {"G(A|B)", to_fraction_string(ctx.G(k, a, b))},
                        {"independent", flag(ind)}};
          return e;
        }));

    out.push_back(make_claim(
        "independence/F/" + ks, "A, B independent iff F(B|A) = F(A|B) = m/n",
        Expectation::must_pass, Arity::pair,
        [k](EvalContext &ctx, std::span<const std::size_t> ops) {
          const auto a = ops[0], b = ops[1];
          const bool ind = ctx.independent(a, b);
          const Rational &m = ctx.mass(b, a);
          const bool full = ctx.F(k, b, a) == m && ctx.F(k, a, b) == m;
          auto e = verdict(ind == full);
          if (e.outcome == Outcome::violated)
            e.values = {{"F(B|A)", to_fraction_string(ctx.F(k, b, a))},
                        {"F(A|B)", to_fraction_string(ctx.F(k, a, b))},
                        {"m/n", to_fraction_string(m)},
                        {"independent", flag(ind)}};
          return e;
        }));

    out.push_back(make_claim(
        "refinement-fineness-printed/" + ks, "A ⪯ B iff F(B|A) = 1 - m/n (as printed)",
        Expectation::expected_fail, Arity::pair,
        [k](EvalContext &ctx, std::span<const std::size_t> ops) {
          const auto a = ops[0], b = ops[1];
          const Rational f = ctx.F(k, b, a);
          const Rational printed = 1 - ctx.mass(b, a);
          const bool finer = ctx.coarser(b, a);
          auto e = verdict(finer == (f == printed));
          if (e.outcome == Outcome::violated)
            e.values = {{"F(B|A)", to_fraction_string(f)},
                        {"1 - m/n", to_fraction_string(printed)},
                        {"A ⪯ B", flag(finer)}};
          return e;
        }));

    out.push_back(make_claim(
        "refinement-fineness/" + ks, "A ⪯ B implies F(B|A) = 0", Expectation::must_pass,
        Arity::pair, [k](EvalContext &ctx, std::span<const std::size_t> ops) {
          const auto a = ops[0], b = ops[1];
          if (!ctx.coarser(b, a))
            return Evaluation{};
          const Rational f = ctx.F(k, b, a);
          auto e = verdict(f == 0);
          if (e.outcome == Outcome::violated)
            e.values = {{"F(B|A)", to_fraction_string(f)}};
          return e;
        }));

    for (auto t : {Target::G, Target::F}) {
      const bool is_g = t == Target::G;
      out.push_back(make_claim(
          "quotient-refinement/" + std::string(to_string(t)) + "/" + ks,
          is_g ? "quotient granules: A ⪯ B iff G(B|A) = 1"
               : "quotient granules: A ⪯ B iff F(B|A) = 0",
          Expectation::must_pass, Arity::pair,
          [k, is_g](EvalContext &ctx, std::span<const std::size_t> ops) {
            const auto a = ops[0], b = ops[1];
            const Rational v = is_g ? ctx.G(k, b, a) : ctx.F(k, b, a);
            const bool finer = ctx.coarser(b, a);
            auto e = verdict(finer == (v == (is_g ? 1 : 0)));
            if (e.outcome == Outcome::violated)
              e.values = {{is_g ? "G(B|A)" : "F(B|A)", to_fraction_string(v)},
                          {"A ⪯ B", flag(finer)}};
            return e;
          },
          Domain::quotient_granules));
    }

    out.push_back(make_claim(
        "entropy-range/" + ks, "0 <= H(B|A) <= log n and 0 <= H'(B|A) <= log n",
        Expectation::must_pass, Arity::pair,
        [k](EvalContext &ctx, std::span<const std::size_t> ops) {
          const auto a = ops[0], b = ops[1];
          const auto &hp = ctx.H_prime(k, b, a);
          const double h = ctx.H(k, b, a);
          const double hi = ctx.log_n() + kEntropyTolerance;
          const double lo = -kEntropyTolerance;
          auto e = verdict(h >= lo && h <= hi && hp.value >= lo && hp.value <= hi, hp.clamped);
          if (e.outcome == Outcome::violated)
            e.values = {{"H(B|A)", fmt_double(h)},
                        {"H'(B|A)", fmt_double(hp.value)},
                        {"log n", fmt_double(ctx.log_n())}};
          return e;
        }));

    for (auto t : {Target::H, Target::H_prime}) {
      const bool is_h = t == Target::H;
      const std::string ts(to_string(t));
      out.push_back(make_claim(
          "entropy-coarser/" + ts + "/" + ks,
          is_h ? "B ⪰ A implies H(B|A) = (m/n) log n" : "B ⪰ A implies H'(B|A) = 0",
          Expectation::must_pass, Arity::pair,
          [k, t](EvalContext &ctx, std::span<const std::size_t> ops) {
            const auto a = ops[0], b = ops[1];
            if (!ctx.coarser(b, a))
              return Evaluation{};
            const Value v = measure(ctx, t, k, b, a);
            const Value want = t == Target::H ? top(ctx, t, b, a) : zero(t);
            auto e = verdict(eq(v, want), v.clamped);
            if (e.outcome == Outcome::violated)
              e.values = {{label(t, "B", "A"), v.str()}, {"expected", want.str()}};
            return e;
          }));
      out.push_back(make_claim(
          "entropy-coarser-converse/" + ts + "/" + ks,
          is_h ? "H(B|A) = (m/n) log n implies A ⪯ B or A, B independent"
               : "H'(B|A) = 0 implies A ⪯ B or A, B independent",
          Expectation::must_pass, Arity::pair,
          [k, t](EvalContext &ctx, std::span<const std::size_t> ops) {
            const auto a = ops[0], b = ops[1];
            const Value v = measure(ctx, t, k, b, a);
            const Value want = t == Target::H ? top(ctx, t, b, a) : zero(t);
            if (!eq(v, want))
              return Evaluation{};
            const bool finer = ctx.coarser(b, a);
            const bool ind = ctx.independent(a, b);
            auto e = verdict(finer || ind, v.clamped);
            if (e.outcome == Outcome::violated)
              e.values = {{label(t, "B", "A"), v.str()},
                          {"A ⪯ B", flag(finer)},
                          {"independent", flag(ind)}};
            return e;
          }));
      out.push_back(make_claim(
          "entropy-quotient-refinement/" + ts + "/" + ks,
          is_h ? "quotient granules: A ⪯ B iff H(B|A) = log n"
               : "quotient granules: A ⪯ B iff H'(B|A) = 0",
          Expectation::must_pass, Arity::pair,
          [k, t](EvalContext &ctx, std::span<const std::size_t> ops) {
            const auto a = ops[0], b = ops[1];
            const Value v = measure(ctx, t, k, b, a);
            const Value want = t == Target::H ? approx(ctx.log_n()) : zero(t);
            const bool finer = ctx.coarser(b, a);
            auto e = verdict(finer == eq(v, want), v.clamped);
            if (e.outcome == Outcome::violated)
              e.values = {{label(t, "B", "A"), v.str()}, {"A ⪯ B", flag(finer)}};
            return e;
          },
          Domain::quotient_granules));
    }

    // Merging two blocks of B into one block of C.
    for (auto t : {Target::G, Target::H, Target::H_prime}) {
      const std::string ts(to_string(t));
      const bool increasing = is_increasing(t);
      out.push_back(make_claim(
          "merge/" + ts + "/" + ks,
          increasing ? ts + "(B|A) <= " + ts + "(C|A) and " + ts + "(A|C) <= " + ts +
                           "(A|B) for C a single merge of B"
                     : ts + "(C|A) <= " + ts + "(B|A) and " + ts + "(A|B) <= " + ts +
                           "(A|C) for C a single merge of B",
          Expectation::must_pass, Arity::merge,
          [k, t, increasing](EvalContext &ctx, std::span<const std::size_t> ops) {
            const auto a = ops[0], b = ops[1], c = ops[2];
            const Value ba = measure(ctx, t, k, b, a), ca = measure(ctx, t, k, c, a);
            const Value ac = measure(ctx, t, k, a, c), ab = measure(ctx, t, k, a, b);
            const bool first = increasing ? le(ba, ca) : le(ca, ba);
            const bool second = increasing ? le(ac, ab) : le(ab, ac);
            auto e = verdict(first && second, ba.clamped || ca.clamped || ac.clamped ||
                                                  ab.clamped);
            if (e.outcome == Outcome::violated) {
              e.values = {{label(t, "B", "A"), ba.str()},
                          {label(t, "C", "A"), ca.str()},
                          {label(t, "A", "B"), ab.str()},
                          {label(t, "A", "C"), ac.str()}};
              e.note = first ? "second inequality fails" : "first inequality fails";
            }
            return e;
          }));
    }

    for (auto t : {Target::G, Target::F, Target::H, Target::H_prime})
      out.push_back(weak_implication_claim(t, k));
  }

  out.push_back(make_claim(
      "shannon-reduction", "H'_sh2(A|{X}) equals the Shannon entropy of A's block sizes",
      Expectation::must_pass, Arity::single,
      [](EvalContext &ctx, std::span<const std::size_t> ops) {
        const Granule &g = ctx.granule(ops[0]);
        const auto whole = ctx.intern(Granule::whole(ctx.universe()));
        const double n = static_cast<double>(ctx.n());
        double shannon = 0.0;
        for (auto block : g.blocks()) {
          const double p = static_cast<double>(block.size()) / n;
          shannon -= p * std::log(p) / std::log(n) * ctx.log_n();
        }
        const double hp = ctx.H_prime(MeasureKind::sh2, ops[0], whole).value;
        auto e = verdict(std::abs(hp - shannon) <= kEntropyTolerance);
        if (e.outcome == Outcome::violated)
          e.values = {{"H'(A|{X})", fmt_double(hp)}, {"shannon", fmt_double(shannon)}};
        return e;
      },
      Domain::quotient_granules));

  return out;
}

Claim custom_claim(std::string id, std::string description, Expectation expectation,
                   std::function<CheckReport(std::size_t)> runner) {
  Claim c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.expectation = expectation;
  c.arity = Arity::custom;
  c.runner = std::move(runner);
  return c;
}

std::vector<Claim> custom_claims() {
  return {
      custom_claim("rough/pawlak",
                   "complete systems: set approximations equal classical approximations",
                   Expectation::must_pass, check_pawlak_agreement),
      custom_claim("rough/micro-bounds",
                   "set approximations equal brute-force bounds over definable sets",
                   Expectation::must_pass, check_micro_bounds),
      custom_claim("rough/macro-bounds",
                   "granule approximations equal brute-force bounds over definable granules",
                   Expectation::must_pass, check_macro_bounds),
      custom_claim("rough/shortcut-agreement",
                   "complete systems: A ∧ P and A ∨t P equal the granule approximations",
                   Expectation::expected_fail, check_shortcut_agreement),
      custom_claim("enumeration/counts",
                   "granule enumeration counts match the Bell-number closed forms",
                   Expectation::must_pass, check_enumeration_counts),
  };
}

} // namespace

std::vector<Claim> all_claims() {
  auto out = axiom_claims();
  for (auto &c : theorem_claims())
    out.push_back(std::move(c));
  for (auto &c : custom_claims())
    out.push_back(std::move(c));
  return out;
}

std::vector<Claim> select_claims(const std::vector<std::string> &patterns) {
  auto claims = all_claims();
  if (patterns.empty())
    return claims;
  std::vector<Claim> out;
  for (auto &c : claims) {
    for (std::string p : patterns) {
      if (!p.empty() && p.back() == '*')
        p.pop_back();
      if (c.id == p || (c.id.rfind(p, 0) == 0 && (p.empty() || p.back() == '/' ||
                                                 c.id[p.size()] == '/'))) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Running claims

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Enumerated granules and derived operand lists shared by a run.
class Workspace {
public:
  explicit Workspace(std::size_t n) : ctx_(Universe::numbered(n)) {
    for (const auto &g : enumerate_granules({n, Subject::granules, false}, ctx_.universe()))
      all_.push_back(ctx_.intern(g));
    for (const auto &g :
         enumerate_granules({n, Subject::quotient_granules, false}, ctx_.universe()))
      quotient_.push_back(ctx_.intern(g));
  }

  EvalContext &ctx() { return ctx_; }

  const std::vector<std::size_t> &domain(Domain d, ScopeOverride s) const {
    return (s == ScopeOverride::quotient || d == Domain::quotient_granules) ? quotient_ : all_;
  }

  /// (B, C) with C ⪰ B, both from the domain.
  const std::vector<std::pair<std::size_t, std::size_t>> &chains(Domain d, ScopeOverride s) {
    const bool q = s == ScopeOverride::quotient || d == Domain::quotient_granules;
    auto &cache = q ? quotient_chains_ : all_chains_;
    if (!cache) {
      cache.emplace();
      const auto &dom = domain(d, s);
      for (auto b : dom)
        for (auto c : dom)
          if (ctx_.coarser(c, b))
            cache->emplace_back(b, c);
    }
    return *cache;
  }

  const std::vector<std::size_t> &merges(std::size_t b) {
    auto it = merges_.find(b);
    if (it == merges_.end()) {
      std::vector<std::size_t> ids;
      for (const auto &g : single_merges(ctx_.granule(b)))
        ids.push_back(ctx_.intern(g));
      it = merges_.emplace(b, std::move(ids)).first;
    }
    return it->second;
  }

private:
  EvalContext ctx_;
  std::vector<std::size_t> all_, quotient_;
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> all_chains_, quotient_chains_;
  std::map<std::size_t, std::vector<std::size_t>> merges_;
};

std::string scope_text(const Claim &claim, ScopeOverride scope) {
  if (claim.arity == Arity::custom)
    return "custom";
  if (scope == ScopeOverride::quotient)
    return "quotient granules";
  return std::any_of(claim.domains.begin(), claim.domains.end(),
                     [](Domain d) { return d == Domain::quotient_granules; })
             ? "quotient granules"
             : "granules on all subsets";
}

void record(CheckReport &report, const Claim &claim, EvalContext &ctx,
            std::span<const std::size_t> ops, Evaluation &&e) {
  if (e.outcome == Outcome::skipped)
    return;
  ++report.instances;
  if (e.clamped)
    ++report.clamped_instances;
  if (e.outcome != Outcome::violated)
    return;
  ++report.violation_count;
  if (report.violations.size() >= kMaxStoredCertificates)
    return;
  Certificate cert;
  for (std::size_t i = 0; i < ops.size(); ++i)
    cert.operands.emplace_back(claim.operand_names[i], ctx.text(ops[i]));
  cert.values = std::move(e.values);
  cert.note = std::move(e.note);
  report.violations.push_back(std::move(cert));
}

CheckReport run_in(const Claim &claim, Workspace &ws, std::size_t n, ScopeOverride scope) {
  const auto start = Clock::now();
  if (claim.arity == Arity::custom) {
    CheckReport r = claim.runner(n);
    r.claim_id = claim.id;
    r.description = claim.description;
    r.expectation = claim.expectation;
    r.wall_seconds = seconds_since(start);
    return r;
  }
  CheckReport report;
  report.claim_id = claim.id;
  report.description = claim.description;
  report.expectation = claim.expectation;
  report.n = n;
  report.scope = scope_text(claim, scope);
  auto &ctx = ws.ctx();
  switch (claim.arity) {
  case Arity::single:
    for (auto a : ws.domain(claim.domains[0], scope)) {
      std::size_t ops[] = {a};
      record(report, claim, ctx, ops, claim.predicate(ctx, ops));
    }
    break;
  case Arity::pair:
    for (auto a : ws.domain(claim.domains[0], scope))
      for (auto b : ws.domain(claim.domains[1], scope)) {
        std::size_t ops[] = {a, b};
        record(report, claim, ctx, ops, claim.predicate(ctx, ops));
      }
    break;
  case Arity::triple: {
    const auto &chains = ws.chains(claim.domains[1], scope);
    for (auto a : ws.domain(claim.domains[0], scope))
      for (auto [b, c] : chains) {
        std::size_t ops[] = {a, b, c};
        record(report, claim, ctx, ops, claim.predicate(ctx, ops));
      }
    break;
  }
  case Arity::merge:
    for (auto a : ws.domain(claim.domains[0], scope))
      for (auto b : ws.domain(claim.domains[1], scope))
        for (auto c : ws.merges(b)) {
          std::size_t ops[] = {a, b, c};
          record(report, claim, ctx, ops, claim.predicate(ctx, ops));
        }
    break;
  case Arity::custom:
    break;
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

void require_scope(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("universe size must be positive");
  if (n > kMaxEnumerationSize)
    throw CapExceededError("verification universe size", n, kMaxEnumerationSize);
}

} // namespace

CheckReport check_axiom(AxiomId axiom, MeasureKind k, Target target, std::size_t n,
                        ScopeOverride scope) {
  return run_claim(axiom_claim(axiom, k, target), n, scope);
}

CheckReport run_claim(const Claim &claim, std::size_t n, ScopeOverride scope) {
  require_scope(n);
  Workspace ws(n);
  return run_in(claim, ws, n, scope);
}

Outcome replay(const Claim &claim, const Certificate &certificate, std::size_t n) {
  if (claim.arity == Arity::custom)
    throw std::invalid_argument("custom claims cannot be replayed");
  if (certificate.operands.size() != claim.operand_names.size())
    throw std::invalid_argument("certificate operand count does not match the claim");
  EvalContext ctx(Universe::numbered(n));
  std::vector<std::size_t> ops;
  for (const auto &[name, text] : certificate.operands)
    ops.push_back(ctx.intern(parse_granule(text, ctx.universe())));
  if (claim.arity == Arity::merge) {
    auto merges = single_merges(ctx.granule(ops[1]));
    if (std::find(merges.begin(), merges.end(), ctx.granule(ops[2])) == merges.end())
      return Outcome::skipped;
  }
  return claim.predicate(ctx, ops).outcome;
}

std::size_t VerifyReport::failed() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const CheckReport &r) { return r.blocks_verification(); }));
}

std::size_t VerifyReport::flagged() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(),
      [](const CheckReport &r) { return r.status() == Status::flagged; }));
}

VerifyReport run_verify(const VerifyOptions &options) {
  require_scope(options.n);
  const auto start = Clock::now();
  VerifyReport report;
  report.n = options.n;
  report.scope = options.scope;
  Workspace ws(options.n);
  for (const auto &claim : select_claims(options.claims))
    report.checks.push_back(run_in(claim, ws, options.n, options.scope));
  report.wall_seconds = seconds_since(start);
  return report;
}

} // namespace gran::oracle
