#include "g4uip/cli.hpp"

#include <CLI11.hpp>

#include "g4uip/oracle.hpp"
#include "g4uip/search.hpp"
#include "g4uip/syntax.hpp"
#include "g4uip/uip.hpp"

namespace g4uip::cli {

namespace {

struct CliConfig {
  std::string logic = "ck";
  std::string var = "p";
  std::string quantifier = "forall";
  std::string proof = "none";
  std::string format = "text";
  std::string rule = "all";
  std::string search = "pruned";
  bool simplify = false;
  bool check = false;
  int max_weight = 3;
  int max_context = 2;
  int side_weight = 0;
  std::string input;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LogicId logic_of(const CliConfig& c) { return *logic_from_name(c.logic); }

Format format_of(const CliConfig& c) {
  if (c.format == "json") return Format::Json;
  if (c.format == "latex") return Format::Latex;
  return Format::Text;
}

// A bare formula φ stands for the sequent ⇒ φ.
Sequent parse_input(const std::string& text) {
  if (text.find("|-") != std::string::npos) return parse_sequent(text);
  return Sequent(Multiset{}, parse_formula(text));
}

void report_parse_error(const ParseError& e, const std::string& input, std::ostream& err) {
  err << "error: " << e.what() << "\n  " << input << "\n  " << std::string(e.position(), ' ') << "^\n";
}

std::string render_formula(Formula f, Format fmt) {
  return fmt == Format::Json ? to_json(f).dump() : render(f, fmt);
}

void print_reports(const std::vector<Report>& reports, Format fmt, std::ostream& out) {
  if (fmt == Format::Json) {
    // Timings are left out so that repeated runs print identical bytes.
    auto arr = nlohmann::json::array();
    for (const auto& r : reports) {
      auto j = to_json(r);
      j.erase("elapsed_seconds");
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
    return;
  }
  for (const auto& r : reports) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.property << " checked=" << r.checked;
    if (!r.passed()) out << " failures=" << r.failure_count;
    for (const auto& n : r.notes) out << " [" << n << "]";
    out << "\n";
    for (const auto& f : r.failures) out << "  " << f << "\n";
  }
}

bool all_passed(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

int cmd_decide(const CliConfig& c, std::ostream& out) {
  LogicId logic = logic_of(c);
  Sequent s = parse_input(c.input);
  if (!respects_regime(s, logic)) throw UsageError("CK sequents need exactly one succedent formula");
  SearchCache cache(c.search == "exhaustive" ? Strategy::Exhaustive : Strategy::Pruned);
  Decision d = decide(s, logic, cache);
  Format fmt = format_of(c);

  if (fmt == Format::Json) {
    nlohmann::json j{{"logic", logic_name(logic)}, {"sequent", to_json(s)}, {"provable", d.is_provable()}};
    if (d && c.proof == "json") j["proof"] = to_json(*d.proof());
    else if (d && c.proof == "text") j["proof"] = proof_to_text(*d.proof());
    else if (d && c.proof == "latex") j["proof"] = proof_to_latex(*d.proof());
    out << j.dump(2) << "\n";
  } else {
    out << (d ? "provable" : "unprovable") << "\n";
    if (d && c.proof == "text") out << proof_to_text(*d.proof());
    else if (d && c.proof == "json") out << to_json(*d.proof()).dump(2) << "\n";
    else if (d && c.proof == "latex") out << proof_to_latex(*d.proof()) << "\n";
  }
  return d ? kOk : kNegative;
}

int cmd_interpolate(const CliConfig& c, std::ostream& out, std::ostream& err) {
  LogicId logic = logic_of(c);
  Formula phi = parse_formula(c.input);
  bool exists = c.quantifier == "exists";
  QuantCache qcache;
  Formula raw = exists ? interpolate_exists(phi, c.var, logic, qcache)
                       : interpolate_forall(phi, c.var, logic, qcache);
  SearchCache cache;
  int code = kOk;

  if (c.check) {
    Sequent s = exists ? Sequent(Multiset{phi}, raw) : Sequent(Multiset{raw}, phi);
    bool ok = provable(s, logic, cache);
    err << "implication: " << (ok ? "verified" : "FAILED") << "\n";
    if (!ok) code = kNegative;
  }
  Formula shown = raw;
  if (c.simplify) {
    shown = simplify(raw);
    bool ok = equivalent(raw, shown, logic, cache);
    err << "equivalence: " << (ok ? "verified" : "FAILED") << "\n";
    if (!ok) code = kNegative;
  }
  out << render_formula(shown, format_of(c)) << "\n";
  return code;
}

EnumConfig enum_config(const CliConfig& c, std::vector<std::string> alphabet) {
  EnumConfig cfg;
  cfg.alphabet = std::move(alphabet);
  cfg.max_weight = c.max_weight;
  cfg.max_context = c.max_context;
  cfg.side_weight = c.side_weight;
  return cfg;
}

int cmd_check_uip(const CliConfig& c, std::ostream& out) {
  LogicId logic = logic_of(c);
  Formula phi = parse_formula(c.input);
  std::set<std::string> names = free_vars(phi);
  names.insert(c.var);
  names.insert(c.var == "q" ? "r" : "q");
  EnumConfig cfg = enum_config(c, {names.begin(), names.end()});

  QuantCache qcache;
  SearchCache cache;
  Report implication;
  implication.property = "implication " + c.logic + " " + c.var + " " + to_text(phi);
  Report pfree;
  pfree.property = "p-freeness " + c.logic + " " + c.var + " " + to_text(phi);
  Formula e = interpolate_exists(phi, c.var, logic, qcache);
  Formula a = interpolate_forall(phi, c.var, logic, qcache);
  implication.checked = 2;
  if (!provable(Sequent(Multiset{phi}, e), logic, cache)) implication.fail("exists: " + to_text(e));
  if (!provable(Sequent(Multiset{a}, phi), logic, cache)) implication.fail("forall: " + to_text(a));
  pfree.checked = 2;
  if (occurs(c.var, e)) pfree.fail("exists: " + to_text(e));
  if (occurs(c.var, a)) pfree.fail("forall: " + to_text(a));

  std::vector<Report> reports{pfree, implication, check_uniformity(phi, c.var, logic, cfg)};
  print_reports(reports, format_of(c), out);
  return all_passed(reports) ? kOk : kNegative;
}

int cmd_check_structural(const CliConfig& c, std::ostream& out) {
  LogicId logic = logic_of(c);
  EnumConfig cfg = enum_config(c, {"p", "q"});
  std::vector<StructuralRule> rules;
  if (c.rule == "all") {
    rules = {StructuralRule::Wk, StructuralRule::Id, StructuralRule::ImpL, StructuralRule::Cntr,
             StructuralRule::Cut};
  } else {
    rules.push_back(*structural_rule_from_name(c.rule));
  }
  std::vector<Report> reports;
  for (auto r : rules) reports.push_back(check_structural(r, logic, cfg));
  print_reports(reports, format_of(c), out);
  return all_passed(reports) ? kOk : kNegative;
}

// Quick checks of the decision procedure and the interpolant construction.
int cmd_selftest(const CliConfig& c, std::ostream& out) {
  std::vector<Report> reports;
  for (LogicId logic : {LogicId::CK, LogicId::WK}) reports.push_back(check_hilbert_axioms(logic));

  Report n;
  n.property = "N derivation wk";
  n.checked = 1;
  Decision d = decide(parse_sequent("|- <>false -> false"), LogicId::WK);
  if (!d || !check_proof(*d.proof(), LogicId::WK) ||
      rule_spine(*d.proof()) != std::vector<RuleId>{RuleId::ImpR, RuleId::DiaLW, RuleId::BotL})
    n.fail("|- <>false -> false");
  reports.push_back(n);

  Report golden;
  golden.property = "golden interpolants ck";
  const std::vector<std::tuple<std::string, bool, std::string>> cases{
      {"p", false, "false"},
      {"q", false, "q"},
      {"q -> p", false, "(q & []true) -> false"},
      {"p", true, "true & []true"},
  };
  for (const auto& [in, exists, expected] : cases) {
    Formula phi = parse_formula(in);
    Formula got = exists ? interpolate_exists(phi, "p", LogicId::CK) : interpolate_forall(phi, "p", LogicId::CK);
    ++golden.checked;
    if (to_text(got) != expected) golden.fail(in + ": " + to_text(got));
  }
  reports.push_back(golden);

  EnumConfig small;
  small.alphabet = {"p", "q"};
  small.max_weight = 3;
  small.max_context = 1;
  small.side_weight = 2;
  for (LogicId logic : {LogicId::CK, LogicId::WK}) {
    for (auto r : {StructuralRule::Wk, StructuralRule::Id, StructuralRule::ImpL, StructuralRule::Cntr,
                   StructuralRule::Cut})
      reports.push_back(check_structural(r, logic, small));
    for (const char* phi : {"p", "<>p", "q -> p"})
      reports.push_back(check_uniformity(parse_formula(phi), "p", logic, small));
  }
  print_reports(reports, format_of(c), out);
  return all_passed(reports) ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig c;
  CLI::App app{"Decision procedure and uniform interpolants for CK and WK", "g4uip"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--logic", c.logic, "ck or wk")->check(CLI::IsMember({"ck", "wk"}));
    sub->add_option("--format", c.format, "text, latex or json")->check(CLI::IsMember({"text", "latex", "json"}));
  };
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--max-weight", c.max_weight, "formula weight bound")->check(CLI::PositiveNumber);
    sub->add_option("--max-context", c.max_context, "context size bound")->check(CLI::NonNegativeNumber);
  };

  auto* decide_cmd = app.add_subcommand("decide", "decide a sequent (or a formula φ, read as |- φ)");
  add_common(decide_cmd);
  decide_cmd->add_option("--proof", c.proof, "none, text, json or latex")
      ->check(CLI::IsMember({"none", "text", "json", "latex"}));
  decide_cmd->add_option("--search", c.search, "pruned or exhaustive (the backtracking reference)")
      ->check(CLI::IsMember({"pruned", "exhaustive"}));
  decide_cmd->add_option("input", c.input)->required();

  auto* interp_cmd = app.add_subcommand("interpolate", "print a uniform interpolant");
  add_common(interp_cmd);
  interp_cmd->add_option("--var", c.var, "variable to eliminate");
  interp_cmd->add_option("--quantifier", c.quantifier, "forall or exists")
      ->check(CLI::IsMember({"forall", "exists"}));
  interp_cmd->add_flag("--simplify", c.simplify, "apply unit laws; equivalence is checked and reported on stderr");
  interp_cmd->add_flag("--check", c.check, "check the implication property; result on stderr");
  interp_cmd->add_option("input", c.input)->required();

  auto* uip_cmd = app.add_subcommand("check-uip", "bounded p-freeness, implication and uniformity checks");
  add_common(uip_cmd);
  add_bounds(uip_cmd);
  uip_cmd->add_option("--var", c.var, "variable to eliminate");
  uip_cmd->add_option("input", c.input)->required();

  auto* struct_cmd = app.add_subcommand("check-structural", "bounded admissibility checks");
  add_common(struct_cmd);
  add_bounds(struct_cmd);
  struct_cmd->add_option("--rule", c.rule, "wk, id, impL, cntr, cut or all")
      ->check(CLI::IsMember({"wk", "id", "impL", "cntr", "cut", "all"}));
  struct_cmd->add_option("--side-weight", c.side_weight, "weight bound for context and succedent formulas")
      ->check(CLI::NonNegativeNumber);

  auto* self_cmd = app.add_subcommand("selftest", "run the built-in checks");
  self_cmd->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "latex", "json"}));

  std::vector<std::string> storage{"g4uip"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (decide_cmd->parsed()) return cmd_decide(c, out);
    if (interp_cmd->parsed()) return cmd_interpolate(c, out, err);
    if (uip_cmd->parsed()) return cmd_check_uip(c, out);
    if (struct_cmd->parsed()) return cmd_check_structural(c, out);
    return cmd_selftest(c, out);
  } catch (const ParseError& e) {
    report_parse_error(e, c.input, err);
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SearchLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kLimit;
  }
}

}  // namespace g4uip::cli
