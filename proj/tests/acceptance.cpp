// Acceptance run: one PASS/FAIL line per criterion. With arguments, only the
// listed criterion numbers are run.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

#include "g4uip/oracle.hpp"
#include "g4uip/search.hpp"
#include "g4uip/syntax.hpp"
#include "g4uip/uip.hpp"

using namespace g4uip;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::vector<LogicId> kLogics{LogicId::CK, LogicId::WK};

std::string summary(const Report& r) {
  std::ostringstream s;
  s << r.property << ": " << r.checked << " checked, " << r.failure_count << " failed";
  for (const auto& n : r.notes) s << " [" << n << "]";
  for (const auto& f : r.failures) s << "\n      " << f;
  return s.str();
}

Outcome axioms() {
  Outcome o;
  for (LogicId logic : kLogics) {
    Report r = check_hilbert_axioms(logic);
    o.pass = o.pass && r.passed();
    o.detail += summary(r) + "; ";
  }
  return o;
}

Outcome n_derivation() {
  Decision d = decide(parse_sequent("|- <>false -> false"), LogicId::WK);
  if (!d) return {false, "unprovable"};
  const auto& t = *d.proof();
  auto spine = rule_spine(t);
  std::string names;
  for (RuleId r : spine) names += std::string(rule_name(r)) + " ";
  bool shape = spine == std::vector<RuleId>{RuleId::ImpR, RuleId::DiaLW, RuleId::BotL} && proof_size(t) == 3;
  bool checked = check_proof(t, LogicId::WK);
  return {shape && checked, "rules: " + names + (checked ? "(checked)" : "(check failed)")};
}

Outcome structural() {
  EnumConfig cfg;
  cfg.alphabet = {"p", "q"};
  cfg.max_weight = 5;
  cfg.max_context = 2;
  cfg.side_weight = 3;
  Outcome o;
  for (LogicId logic : kLogics)
    for (auto rule : {StructuralRule::Wk, StructuralRule::Id, StructuralRule::ImpL, StructuralRule::Cntr,
                      StructuralRule::Cut}) {
      Report r = check_structural(rule, logic, cfg);
      o.pass = o.pass && r.passed();
      std::ostringstream s;
      s << "\n    " << summary(r) << " (" << static_cast<int>(r.elapsed_seconds) << " s)";
      o.detail += s.str();
    }
  return o;
}

// Sequent on which `rule` applies: random context and succedent with a
// principal formula of the right shape planted in.
Sequent planted(RuleId rule, std::mt19937& rng, const std::vector<Formula>& pool) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> size(0, 3);
  auto any = [&] { return pool[pick(rng)]; };
  std::vector<Formula> items;
  for (int k = size(rng); k > 0; --k) items.push_back(any());
  Succedent d = any();
  Formula a = any(), b = any(), c = any();
  Formula atom = Formula::var(rng() % 2 ? "p" : "q");
  switch (rule) {
    case RuleId::BotL: items.push_back(Formula::bot()); break;
    case RuleId::IdP: items.push_back(atom); d = atom; break;
    case RuleId::AndL: items.push_back(Formula::conj(a, b)); break;
    case RuleId::AndR: d = Formula::conj(a, b); break;
    case RuleId::OrL: items.push_back(Formula::disj(a, b)); break;
    case RuleId::OrR1:
    case RuleId::OrR2: d = Formula::disj(a, b); break;
    case RuleId::ImpR: d = Formula::imp(a, b); break;
    case RuleId::AtomImpL: items.push_back(atom); items.push_back(Formula::imp(atom, b)); break;
    case RuleId::AndImpL: items.push_back(Formula::imp(Formula::conj(a, b), c)); break;
    case RuleId::OrImpL: items.push_back(Formula::imp(Formula::disj(a, b), c)); break;
    case RuleId::ImpImpL: items.push_back(Formula::imp(Formula::imp(a, b), c)); break;
    case RuleId::BoxR: d = Formula::box(a); break;
    case RuleId::BoxImpL: items.push_back(Formula::imp(Formula::box(a), c)); break;
    case RuleId::DiaImpL:
      items.push_back(Formula::imp(Formula::dia(a), c));
      items.push_back(Formula::dia(b));
      break;
    case RuleId::DiaL: items.push_back(Formula::dia(a)); d = Formula::dia(b); break;
    case RuleId::DiaLW:
      items.push_back(Formula::dia(a));
      if (rng() % 3 == 0) d.reset();
      break;
  }
  return Sequent(Multiset(items), d);
}

Outcome termination() {
  std::mt19937 rng(20240601);
  auto pool = enumerate_formulas({"p", "q", "r"}, 3);
  std::size_t instances = 0, premises = 0, bad = 0;
  std::map<RuleId, std::size_t> per_rule;
  while (instances < 10000) {
    auto rule = static_cast<RuleId>(instances % kRuleCount);
    LogicId logic = rule == RuleId::DiaL ? LogicId::CK : rule == RuleId::DiaLW ? LogicId::WK
                    : instances % 2 ? LogicId::WK : LogicId::CK;
    Sequent s = planted(rule, rng, pool);
    if (logic == LogicId::CK && !s.succ) continue;
    for_each_instance(s, logic, rule, [&](RuleInstance& inst) {
      ++instances;
      ++per_rule[inst.rule];
      for (const auto& p : inst.premises) {
        ++premises;
        if (!seq_less(p, s)) ++bad;
      }
      return true;
    });
  }
  std::ostringstream out;
  out << instances << " instances, " << premises << " premises, " << per_rule.size() << " distinct rules (fewest "
      << std::min_element(per_rule.begin(), per_rule.end(), [](auto& x, auto& y) { return x.second < y.second; })->second
      << " each), " << bad << " non-descending";
  return {bad == 0 && per_rule.size() == static_cast<std::size_t>(kRuleCount), out.str()};
}

// Criteria 5 and 6 share one pass over the formulas.
struct ImplicationRun {
  std::size_t formulas = 0;
  std::size_t implication_failures = 0;
  std::size_t pfree_failures = 0;
  std::vector<std::string> examples;
};

const ImplicationRun& implication_run() {
  static const ImplicationRun run = [] {
    ImplicationRun r;
    auto fs = enumerate_formulas({"p", "q"}, 6);
    for (LogicId logic : kLogics) {
      QuantCache qc;
      SearchCache sc;
      for (Formula f : fs) {
        ++r.formulas;
        Formula e = interpolate_exists(f, "p", logic, qc);
        Formula a = interpolate_forall(f, "p", logic, qc);
        bool ok = provable(Sequent(Multiset{f}, e), logic, sc) && provable(Sequent(Multiset{a}, f), logic, sc) &&
                  provable(Sequent(Multiset{f, a}, f), logic, sc);
        if (!ok) {
          ++r.implication_failures;
          if (r.examples.size() < 10) r.examples.push_back(std::string(logic_name(logic)) + " " + to_text(f));
        }
        if (occurs("p", e) || occurs("p", a)) {
          ++r.pfree_failures;
          if (r.examples.size() < 10) r.examples.push_back("p occurs: " + to_text(f));
        }
        if (sc.size() > 2'000'000) sc.clear();
      }
    }
    return r;
  }();
  return run;
}

Outcome implication() {
  const auto& r = implication_run();
  std::ostringstream s;
  s << r.formulas << " (formula, logic) pairs, " << r.implication_failures << " failures";
  for (const auto& e : r.examples) s << "\n      " << e;
  return {r.implication_failures == 0 && r.formulas == 2 * 5058, s.str()};
}

Outcome pfreeness() {
  const auto& r = implication_run();
  std::ostringstream s;
  s << 2 * r.formulas << " interpolants, " << r.pfree_failures << " mention p";
  return {r.pfree_failures == 0 && r.formulas > 0, s.str()};
}

Outcome uniformity() {
  EnumConfig cfg;
  cfg.alphabet = {"p", "q"};
  cfg.max_weight = 3;
  cfg.max_context = 2;
  Outcome o;
  auto fs = enumerate_formulas({"p", "q"}, 4);
  for (LogicId logic : kLogics) {
    Report total;
    total.property = "uniformity " + std::string(logic_name(logic));
    for (Formula f : fs) total.merge(check_uniformity(f, "p", logic, cfg));
    o.pass = o.pass && total.passed();
    std::ostringstream s;
    s << "\n    " << summary(total) << " over " << fs.size() << " formulas";
    o.detail += s.str();
  }
  // The empty succedent is part of the WK enumeration.
  SearchCache sc;
  QuantCache qc;
  Multiset gamma{parse_formula("<>p")};
  bool empty_case = provable(Sequent(gamma.with(parse_formula("[]false")), std::nullopt), LogicId::WK, sc) &&
                    provable(Sequent(Multiset{e_quant(gamma, "p", LogicId::WK, qc), parse_formula("[]false")},
                                     std::nullopt),
                             LogicId::WK, sc);
  o.pass = o.pass && empty_case;
  o.detail += std::string("\n    empty-succedent spot check (<>p, []false |-): ") + (empty_case ? "ok" : "FAILED");
  return o;
}

Outcome duality() {
  std::size_t n = 0, bad = 0;
  std::string first;
  auto fs = enumerate_formulas({"p", "q"}, 4);
  for (LogicId logic : kLogics) {
    QuantCache qc;
    SearchCache sc;
    for (Formula f : fs) {
      ++n;
      if (!equivalent(interpolate_exists(f, "p", logic, qc), exists_via_forall(f, "p", logic, qc), logic, sc)) {
        ++bad;
        if (first.empty()) first = std::string(logic_name(logic)) + " " + to_text(f);
      }
    }
  }
  return {bad == 0, std::to_string(n) + " pairs, " + std::to_string(bad) + " not equivalent " + first};
}

Outcome golden() {
  struct Case {
    const char* phi;
    bool exists;
    const char* expected;
  };
  const Case cases[] = {
      {"p", false, "false"},
      {"q", false, "q"},
      {"q -> p", false, "(q & []true) -> false"},
      {"p", true, "true & []true"},
  };
  Outcome o;
  for (LogicId logic : kLogics)
    for (const auto& c : cases) {
      Formula phi = parse_formula(c.phi);
      std::string got = to_text(c.exists ? interpolate_exists(phi, "p", logic) : interpolate_forall(phi, "p", logic));
      bool ok = got == c.expected;
      o.pass = o.pass && ok;
      o.detail += std::string(logic_name(logic)) + (c.exists ? " exists " : " forall ") + c.phi + " = " + got +
                  (ok ? "; " : " (MISMATCH); ");
    }
  return o;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  std::ifstream in(G4UIP_FIXTURES);
  if (!in) return {false, "fixture file missing"};
  auto fixtures = nlohmann::json::parse(in);
  auto dir = std::filesystem::temp_directory_path() / ("g4uip-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);

  auto run_once = [&](const nlohmann::json& args, int tag) {
    std::string cmd = shell_quote(G4UIP_CLI);
    for (const auto& a : args) cmd += " " + shell_quote(a.get<std::string>());
    auto out = dir / ("out" + std::to_string(tag));
    auto err = dir / ("err" + std::to_string(tag));
    cmd += " >" + shell_quote(out.string()) + " 2>" + shell_quote(err.string());
    int status = std::system(cmd.c_str());
    return std::make_tuple(status, slurp(out), slurp(err));
  };

  std::size_t same = 0;
  std::string differing;
  for (const auto& fx : fixtures) {
    auto a = run_once(fx["args"], 0);
    auto b = run_once(fx["args"], 1);
    if (a == b) ++same;
    else differing += fx["name"].get<std::string>() + " ";
  }
  std::filesystem::remove_all(dir);
  return {same == fixtures.size() && !fixtures.empty(),
          std::to_string(same) + "/" + std::to_string(fixtures.size()) + " fixtures byte-identical " + differing};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Hilbert axiom suite", axioms},
      {"N derivation fixture", n_derivation},
      {"structural admissibility", structural},
      {"strong termination", termination},
      {"interpolant implication", implication},
      {"interpolant p-freeness", pfreeness},
      {"interpolant uniformity", uniformity},
      {"existential/universal duality", duality},
      {"golden interpolants", golden},
      {"CLI determinism", determinism},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int number = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(number)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %2d %s: %s (%.1f s)\n    %s\n", number, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
