#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gran/granule.hpp"
#include "gran/measures.hpp"
#include "gran/oracle/enumerate.hpp"
#include "gran/rational.hpp"

namespace gran::oracle {

/// Which conditional measure an axiom is evaluated on. G and H increase with
/// coarseness; F and H' decrease.
enum class Target { G, F, H, H_prime };

std::string_view to_string(Target t);
std::optional<Target> parse_target(std::string_view text);
bool is_increasing(Target t);

/// One of A1..A12 (increasing form) or A1'..A12' (decreasing form).
struct AxiomId {
  int number = 1;
  bool primed = false;

  std::string to_string() const;
  static std::optional<AxiomId> parse(std::string_view text);
  bool operator==(const AxiomId &) const = default;
};

/// What a claim is expected to do when run.
enum class Expectation {
  must_pass,     ///< stated as true; a violation fails verification
  expected_fail, ///< a known misprint; counterexamples document it
  informational, ///< an unclaimed converse or probe; never fails verification
};

enum class Status { pass, fail, flagged };

std::string_view to_string(Expectation e);
std::string_view to_string(Status s);

struct Certificate {
  /// Operand name and canonical text form, e.g. {"A", "{{1,2},{3}}"}.
  std::vector<std::pair<std::string, std::string>> operands;
  /// Computed quantities relevant to the violation.
  std::vector<std::pair<std::string, std::string>> values;
  std::string note;
};

inline constexpr std::size_t kMaxStoredCertificates = 8;

struct CheckReport {
  std::string claim_id;
  std::string description;
  Expectation expectation = Expectation::must_pass;
  std::size_t n = 0;
  std::string scope;
  std::uint64_t instances = 0; ///< instances whose premise applied
  std::uint64_t violation_count = 0;
  std::vector<Certificate> violations; ///< first kMaxStoredCertificates
  std::uint64_t clamped_instances = 0;
  double wall_seconds = 0.0;

  /// pass iff no violations; otherwise fail for must-pass claims and
  /// flagged for the rest.
  Status status() const;
  bool blocks_verification() const { return status() == Status::fail; }
};

/// Interned granules with memoized measures, shared by all claims of a run.
/// Not thread-safe; use one context per thread.
class EvalContext {
public:
  explicit EvalContext(UniversePtr universe, double log_base = kDefaultLogBase);

  const UniversePtr &universe() const { return universe_; }
  std::size_t n() const { return universe_->size(); }
  double log_n() const { return log_n_; }

  std::size_t intern(const Granule &g);
  const Granule &granule(std::size_t id) const { return granules_[id]; }
  std::string text(std::size_t id) const;

  /// G_k(B|A) and friends, keyed (kind, b, a) as in G(B|A).
  const Rational &G(MeasureKind k, std::size_t b, std::size_t a);
  Rational F(MeasureKind k, std::size_t b, std::size_t a);
  const EntropyValue &H_prime(MeasureKind k, std::size_t b, std::size_t a);
  double H(MeasureKind k, std::size_t b, std::size_t a);
  const Rational &mass(std::size_t b, std::size_t a);
  /// Σ p(a_i ∩ b_j) computed from the distribution table.
  Rational mass_total(std::size_t b, std::size_t a);

  /// b ⪰ a
  bool coarser(std::size_t b, std::size_t a);
  bool independent(std::size_t a, std::size_t b);
  std::size_t meet_id(std::size_t a, std::size_t b);
  std::size_t join_id(std::size_t a, std::size_t b);

private:
  static std::uint64_t key(std::size_t kind, std::size_t b, std::size_t a);

  UniversePtr universe_;
  double log_base_;
  double log_n_;
  std::vector<Granule> granules_;
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

enum class Outcome { skipped, holds, violated };

struct Evaluation {
  Outcome outcome = Outcome::skipped;
  bool clamped = false;
  std::vector<std::pair<std::string, std::string>> values;
  std::string note;
};

/// Operand domain of a claim position.
enum class Domain { granules, quotient_granules };

/// How operand tuples are formed.
enum class Arity {
  single, ///< (A)
  pair,   ///< (A, B)
  triple, ///< (A, B, C) with C ⪰ B
  merge,  ///< (A, B, C) with C a single merge of B
  custom, ///< runs its own enumeration
};

using Predicate = std::function<Evaluation(EvalContext &, std::span<const std::size_t>)>;

/// A quantified statement over small universes.
struct Claim {
  std::string id;
  std::string description;
  Expectation expectation = Expectation::must_pass;
  Arity arity = Arity::pair;
  std::vector<std::string> operand_names;  ///< e.g. {"A", "B"}
  std::vector<Domain> domains;             ///< one per operand (merge: C is derived)
  Predicate predicate;
  /// Set for Arity::custom.
  std::function<CheckReport(std::size_t n)> runner;
};

/// Evaluation scope for a run.
enum class ScopeOverride {
  natural,  ///< each claim uses its own operand domains
  quotient, ///< every operand restricted to quotient granules
};

std::string_view to_string(ScopeOverride s);
std::optional<ScopeOverride> parse_scope(std::string_view text);

/// The axiom statement for a (kind, target). For G and F the boundary axioms
/// are checked in both directions, except A1' on F, whose converse is split
/// into a separate informational claim; for H and H' only the forward
/// boundary direction is claimed. Throws std::invalid_argument when the axiom
/// form does not match the target's direction.
Claim axiom_claim(AxiomId axiom, MeasureKind k, Target target);

/// Runs one axiom over granules on an n-element universe.
CheckReport check_axiom(AxiomId axiom, MeasureKind k, Target target, std::size_t n,
                        ScopeOverride scope = ScopeOverride::natural);

/// Every registered claim: axioms for all kinds and targets, their converse
/// probes, the stated theorems and lemmas, and the documented misprints.
std::vector<Claim> all_claims();

/// Claims whose id equals, or starts with, one of the given patterns
/// (a trailing '*' is optional). An empty list selects everything.
std::vector<Claim> select_claims(const std::vector<std::string> &patterns);

CheckReport run_claim(const Claim &claim, std::size_t n,
                      ScopeOverride scope = ScopeOverride::natural);

/// Re-evaluates one certificate from its operand text alone. Throws
/// std::invalid_argument for custom claims.
Outcome replay(const Claim &claim, const Certificate &certificate, std::size_t n);

/// The rough-set checks are not tuple claims over granules; they run their
/// own enumerations.
CheckReport check_pawlak_agreement(std::size_t n);
CheckReport check_micro_bounds(std::size_t n);
CheckReport check_macro_bounds(std::size_t n);
CheckReport check_shortcut_agreement(std::size_t n);
CheckReport check_enumeration_counts(std::size_t max_n);

struct VerifyOptions {
  std::size_t n = 3;
  std::vector<std::string> claims; ///< id patterns; empty = all
  ScopeOverride scope = ScopeOverride::natural;
};

struct VerifyReport {
  std::size_t n = 0;
  ScopeOverride scope = ScopeOverride::natural;
  std::vector<CheckReport> checks;
  double wall_seconds = 0.0;

  std::size_t failed() const;
  std::size_t flagged() const;
  bool ok() const { return failed() == 0; }
};

/// Runs the selected claims. Throws CapExceededError for n > 5.
VerifyReport run_verify(const VerifyOptions &options);

} // namespace gran::oracle
