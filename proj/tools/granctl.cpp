// granctl: granule measures, rough approximations, lattices, and exhaustive
// verification from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gran/errors.hpp"
#include "gran/granule.hpp"
#include "gran/hasse.hpp"
#include "gran/measures.hpp"
#include "gran/operations.hpp"
#include "gran/oracle/claims.hpp"
#include "gran/oracle/report.hpp"
#include "gran/rough.hpp"
#include "gran/table.hpp"

using namespace gran;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitError = 2;

// Where the universe and attributes come from.
struct SourceOptions {
  std::string table;
  std::string universe;
  std::size_t n = 0;
  std::vector<std::string> attrs; // name={{...}}
};

struct Source {
  UniversePtr universe;
  std::optional<InformationSystem> system;
};

void add_source_options(CLI::App *cmd, SourceOptions &o) {
  cmd->add_option("--table", o.table, "information table (.csv or .json)");
  cmd->add_option("--universe", o.universe, "comma-separated element names");
  cmd->add_option("--n", o.n, "numbered universe 1..n");
  cmd->add_option("--attr", o.attrs, "attribute as name={{a,b},{c}} (repeatable)");
}

std::vector<std::string> split_names(const std::string &text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    out.push_back(item);
  return out;
}

Source load(const SourceOptions &o) {
  Source s;
  if (!o.table.empty()) {
    s.system = ingest(o.table);
    s.universe = s.system->universe();
    if (!o.attrs.empty())
      throw Error("--attr cannot be combined with --table");
    return s;
  }
  if (!o.universe.empty())
    s.universe = Universe::make(split_names(o.universe));
  else if (o.n > 0)
    s.universe = Universe::numbered(o.n);
  else
    throw Error("one of --table, --universe, or --n is required");
  if (!o.attrs.empty()) {
    std::vector<Attribute> attrs;
    for (const auto &spec : o.attrs) {
      auto eq = spec.find('=');
      if (eq == std::string::npos || eq == 0)
        throw Error("attribute must be written name=granule: " + spec);
      attrs.push_back({spec.substr(0, eq), parse_granule(spec.substr(eq + 1), s.universe)});
    }
    s.system.emplace(s.universe, std::move(attrs));
  }
  return s;
}

const InformationSystem &require_system(const Source &s) {
  if (!s.system)
    throw Error("this command needs an information system (--table or --attr)");
  return *s.system;
}

// "@name" names an attribute, "@P" the base granule, "@X" the whole universe;
// anything else is the canonical text form.
Granule granule_arg(const std::string &spec, const Source &s) {
  if (spec == "@X")
    return Granule::whole(s.universe);
  if (!spec.empty() && spec[0] == '@') {
    const auto &sys = require_system(s);
    if (spec == "@P")
      return base_granule(sys);
    return sys.attribute(spec.substr(1)).granule;
  }
  return parse_granule(spec, s.universe);
}

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string exact_and_decimal(const MeasureValue &v) {
  return v.to_string() + " (" + decimal(v.to_double()) + ")";
}

std::vector<MeasureKind> kinds_arg(const std::vector<std::string> &names) {
  if (names.empty())
    return {kAllMeasureKinds.begin(), kAllMeasureKinds.end()};
  std::vector<MeasureKind> out;
  for (const auto &name : names) {
    auto k = parse_measure_kind(name);
    if (!k)
      throw Error("unknown measure kind '" + name + "' (expected sh1..sh5)");
    out.push_back(*k);
  }
  return out;
}

DefinableMode mode_arg(const std::string &text, const InformationSystem &sys) {
  if (text.empty())
    return default_mode(sys);
  auto m = parse_definable_mode(text);
  if (!m)
    throw Error("unknown mode '" + text + "' (expected paper-literal or attribute-generated)");
  return *m;
}

void emit(const std::string &text, const std::string &path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw IoError("cannot write " + path);
  out << text;
  if (!out)
    throw IoError("write failed: " + path);
}

// ---------------------------------------------------------------------------

struct MeasuresOptions {
  SourceOptions source;
  std::string a, b;
  std::vector<std::string> kinds;
  double log_base = kDefaultLogBase;
  bool json = false;
};

int run_measures(const MeasuresOptions &o) {
  auto src = load(o.source);
  const Granule a = granule_arg(o.a, src);
  const Granule b = o.b.empty() ? Granule::whole(src.universe) : granule_arg(o.b, src);
  const bool independent = are_independent(a, b);
  const bool complement = is_quotient_complement(b, a);

  json rows = json::array();
  std::ostringstream text;
  text << "A = " << to_string(a) << "\nB = " << to_string(b) << "\n";
  for (auto k : kinds_arg(o.kinds)) {
    auto m = measure_all(k, b, a, o.log_base);
    rows.push_back({{"kind", std::string(to_string(k))},
                    {"G", m.granularity.to_string()},
                    {"G_decimal", m.granularity.to_double()},
                    {"F", m.fineness.to_string()},
                    {"F_decimal", m.fineness.to_double()},
                    {"H", m.granularity_entropy.value},
                    {"H_prime", m.fineness_entropy.value},
                    {"clamped", m.fineness_entropy.clamped},
                    {"mass", to_fraction_string(m.mass)}});
    text << to_string(k) << "  G(B|A) = " << exact_and_decimal(m.granularity)
         << "  F(B|A) = " << exact_and_decimal(m.fineness)
         << "  H(B|A) = " << decimal(m.granularity_entropy.value)
         << "  H'(B|A) = " << decimal(m.fineness_entropy.value);
    if (m.fineness_entropy.clamped)
      text << "  [clamped]";
    text << "\n";
  }
  const Rational mass = mass_ratio(a, b);
  text << "m/n = " << to_fraction_string(mass) << " (" << decimal(to_double(mass)) << ")\n"
       << "independent: " << (independent ? "yes" : "no")
       << "\nquotient complement: " << (complement ? "yes" : "no") << "\n";

  if (o.json) {
    json doc{{"A", to_string(a)},
             {"B", to_string(b)},
             {"log_base", o.log_base},
             {"mass", to_fraction_string(mass)},
             {"independent", independent},
             {"quotient_complement", complement},
             {"measures", rows}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct ApproxOptions {
  SourceOptions source;
  std::string set, granule, mode;
  bool json = false;
};

int run_approx(const ApproxOptions &o) {
  auto src = load(o.source);
  const auto &sys = require_system(src);
  const auto &u = *src.universe;
  if (o.set.empty() == o.granule.empty())
    throw Error("give exactly one of --set or --granule");

  json doc;
  std::ostringstream text;
  if (!o.set.empty()) {
    const DefinableMode mode = mode_arg(o.mode, sys);
    auto space = make_micro_space(sys, mode);
    const ElementSet target = parse_set(o.set, u);
    auto r = approximate_set(target, space);
    doc = {{"target", format_set(target, u)},
           {"lower", format_set(r.lower, u)},
           {"upper", r.upper ? json(format_set(*r.upper, u)) : json(nullptr)},
           {"category", std::string(to_string(r.category))},
           {"coarse_category", std::string(to_string(coarsen(r.category)))},
           {"mode", std::string(to_string(mode))}};
    text << "target: " << format_set(target, u) << "\nlower:  " << format_set(r.lower, u)
         << "\nupper:  " << (r.upper ? format_set(*r.upper, u) : "none")
         << "\ncategory: " << to_string(r.category) << " (" << to_string(coarsen(r.category))
         << ")\nmode: " << to_string(mode) << "\n";
    if (sys.complete()) {
      auto [lower, upper] = pawlak_approximation(target, space.base);
      const bool agree = lower == r.lower && r.upper == upper;
      doc["classical_agreement"] = agree;
      text << "classical agreement: " << (agree ? "yes" : "no") << "\n";
    }
  } else {
    const Granule target = granule_arg(o.granule, src);
    auto bounds = granule_bounds(target, sys);
    auto show = [](const std::optional<Granule> &g) {
      return g ? json(to_string(*g)) : json(nullptr);
    };
    doc = {{"target", to_string(target)},
           {"lower", show(bounds.lower)},
           {"upper", show(bounds.upper)},
           {"category", bounds.lower && bounds.upper && *bounds.lower == target &&
                                *bounds.upper == target
                            ? "definable"
                            : (bounds.lower && bounds.upper ? "roughly_definable"
                                                            : "undefinable")}};
    text << "target: " << to_string(target)
         << "\nlower:  " << (bounds.lower ? to_string(*bounds.lower) : "none")
         << "\nupper:  " << (bounds.upper ? to_string(*bounds.upper) : "none") << "\n";
    if (sys.complete()) {
      auto s = complete_shortcut(target, sys);
      const bool agree = bounds.lower == s.lower && bounds.upper == s.upper;
      doc["shortcut"] = {{"lower", to_string(s.lower)}, {"upper", to_string(s.upper)}};
      doc["shortcut_agreement"] = agree;
      text << "shortcut lower (A meet P): " << to_string(s.lower)
           << "\nshortcut upper (A join P): " << to_string(s.upper)
           << "\nshortcut agreement: " << (agree ? "yes" : "no") << "\n";
    }
  }
  std::cout << (o.json ? doc.dump(2) + "\n" : text.str());
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyCliOptions {
  std::size_t n = 3;
  std::vector<std::string> claims;
  std::string scope = "natural";
  bool json = false;
  bool list = false;
  std::string out;
};

int run_verify_command(const VerifyCliOptions &o) {
  if (o.list) {
    for (const auto &c : oracle::select_claims(o.claims))
      std::cout << c.id << "  [" << oracle::to_string(c.expectation) << "]  " << c.description
                << "\n";
    return 0;
  }
  auto scope = oracle::parse_scope(o.scope);
  if (!scope)
    throw Error("unknown scope '" + o.scope + "' (expected natural or quotient)");
  oracle::VerifyOptions options;
  options.n = o.n;
  options.claims = o.claims;
  options.scope = *scope;
  if (!o.claims.empty() && oracle::select_claims(o.claims).empty())
    throw Error("no claim matches the given --claims patterns");
  auto report = oracle::run_verify(options);
  if (o.json)
    emit(oracle::to_json(report).dump(2) + "\n", o.out);
  else
    emit(oracle::summary_text(report), o.out);
  if (!o.json && !o.out.empty())
    std::cout << oracle::summary_text(report);
  return report.ok() ? 0 : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------

struct LatticeOptions {
  SourceOptions source;
  bool micro = false;
  bool macro = false;
  std::string mode;
  std::string out;
};

int run_lattice(const LatticeOptions &o) {
  if (o.micro == o.macro)
    throw Error("give exactly one of --micro or --macro");
  auto src = load(o.source);
  HasseDiagram d;
  if (o.micro) {
    const InformationSystem *sys = src.system ? &*src.system : nullptr;
    const DefinableMode mode = sys ? mode_arg(o.mode, *sys) : DefinableMode::paper_literal;
    d = micro_hasse(src.universe, sys, mode);
  } else {
    d = macro_hasse(require_system(src));
  }
  emit(to_dot(d), o.out);
  return 0;
}

// ---------------------------------------------------------------------------

struct OpsOptions {
  SourceOptions source;
  std::string op, a, b;
  bool json = false;
};

int run_ops(const OpsOptions &o) {
  auto src = load(o.source);
  const Granule a = granule_arg(o.a, src);
  const Granule b = granule_arg(o.b, src);
  json doc{{"op", o.op}, {"A", to_string(a)}, {"B", to_string(b)}};
  std::string line;
  if (o.op == "meet") {
    line = to_string(meet(a, b));
  } else if (o.op == "quotient-join") {
    line = to_string(quotient_join(a, b));
  } else if (o.op == "join") {
    auto r = join_relation(a, b);
    std::ostringstream pairs;
    pairs << "{";
    bool first = true;
    for (auto [x, y] : r.pairs()) {
      pairs << (first ? "" : ",") << "(" << src.universe->name(x) << ","
            << src.universe->name(y) << ")";
      first = false;
    }
    pairs << "}";
    line = pairs.str();
    doc["equivalence"] = r.is_equivalence();
    if (r.is_equivalence())
      doc["granule"] = to_string(granule_of(r));
  } else if (o.op == "compare") {
    line = std::string(to_string(compare(a, b)));
  } else {
    throw Error("unknown operation '" + o.op + "'");
  }
  doc["result"] = line;
  std::cout << (o.json ? doc.dump(2) : line) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct InfoOptions {
  SourceOptions source;
  bool json = false;
};

int run_info(const InfoOptions &o) {
  auto src = load(o.source);
  const auto &sys = require_system(src);
  json attrs = json::array();
  std::ostringstream text;
  text << "objects: " << src.universe->size() << "\n";
  for (const auto &at : sys.attributes()) {
    attrs.push_back({{"name", at.name},
                     {"granule", to_string(at.granule)},
                     {"carrier", format_set(at.granule.carrier(), *src.universe)}});
    text << at.name << ": " << to_string(at.granule) << "\n";
  }
  const Granule p = base_granule(sys);
  text << "P: " << to_string(p) << "\ncomplete: " << (sys.complete() ? "yes" : "no")
       << "\ndefault mode: " << to_string(default_mode(sys)) << "\n";
  if (o.json) {
    json doc{{"objects", src.universe->names()},
             {"attributes", attrs},
             {"base", to_string(p)},
             {"complete", sys.complete()},
             {"default_mode", std::string(to_string(default_mode(sys)))}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Granule measures, rough approximations, and exhaustive verification"};
  app.require_subcommand(1);

  MeasuresOptions mo;
  auto *measures = app.add_subcommand("measures", "conditional granularity, fineness, entropies");
  add_source_options(measures, mo.source);
  measures->add_option("--a", mo.a, "granule A (text form, @attr, @P, or @X)")->required();
  measures->add_option("--b", mo.b, "granule B (default {X})");
  measures->add_option("--kind", mo.kinds, "sh1..sh5 (repeatable; default all)");
  measures->add_option("--log-base", mo.log_base, "entropy logarithm base")
      ->check(CLI::PositiveNumber);
  measures->add_flag("--json", mo.json, "JSON output");

  ApproxOptions ao;
  auto *approx = app.add_subcommand("approx", "lower and upper approximations");
  add_source_options(approx, ao.source);
  approx->add_option("--set", ao.set, "target set, e.g. {1,2,3}");
  approx->add_option("--granule", ao.granule, "target granule");
  approx->add_option("--mode", ao.mode, "paper-literal or attribute-generated");
  approx->add_flag("--json", ao.json, "JSON output");

  VerifyCliOptions vo;
  auto *verify = app.add_subcommand("verify", "exhaustive check of axioms and theorems");
  verify->add_option("--n", vo.n, "universe size (1..5)")->check(CLI::Range(1, 5));
  verify->add_option("--claims", vo.claims, "claim id or prefix (repeatable)");
  verify->add_option("--scope", vo.scope, "natural or quotient");
  verify->add_flag("--json", vo.json, "JSON report");
  verify->add_flag("--list", vo.list, "list claim ids and exit");
  verify->add_option("--out", vo.out, "write the report to a file");

  LatticeOptions lo;
  auto *lattice = app.add_subcommand("lattice", "Hasse diagram in DOT");
  add_source_options(lattice, lo.source);
  lattice->add_flag("--micro", lo.micro, "Boolean lattice of subsets");
  lattice->add_flag("--macro", lo.macro, "lattice of definable granules");
  lattice->add_option("--mode", lo.mode, "definable-set mode for --micro");
  lattice->add_option("--out", lo.out, "output path (default stdout)");

  OpsOptions oo;
  auto *ops = app.add_subcommand("ops", "granule operations");
  ops->add_option("op", oo.op, "meet, join, quotient-join, or compare")
      ->required()
      ->check(CLI::IsMember({"meet", "join", "quotient-join", "compare"}));
  add_source_options(ops, oo.source);
  ops->add_option("--a", oo.a, "granule A")->required();
  ops->add_option("--b", oo.b, "granule B")->required();
  ops->add_flag("--json", oo.json, "JSON output");

  InfoOptions io;
  auto *info = app.add_subcommand("info", "summarize an information system");
  add_source_options(info, io.source);
  info->add_flag("--json", io.json, "JSON output");

  SourceOptions eo;
  auto *exporter = app.add_subcommand("export", "write the system back as CSV");
  add_source_options(exporter, eo);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*measures)
      return run_measures(mo);
    if (*approx)
      return run_approx(ao);
    if (*verify)
      return run_verify_command(vo);
    if (*lattice)
      return run_lattice(lo);
    if (*ops)
      return run_ops(oo);
    if (*info)
      return run_info(io);
    if (*exporter) {
      std::cout << write_csv(to_table(require_system(load(eo))));
      return 0;
    }
  } catch (const CapExceededError &e) {
    std::cerr << "error: " << e.what()
              << "\nhint: use a smaller universe or fewer base blocks\n";
    return kExitError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
