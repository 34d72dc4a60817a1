#include <doctest.h>

#include <algorithm>

#include "g4uip/calculus.hpp"
#include "g4uip/search.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

bool has_rule(const std::vector<RuleInstance>& xs, RuleId r) {
  return std::any_of(xs.begin(), xs.end(), [&](const RuleInstance& i) { return i.rule == r; });
}

bool same_instance(const RuleInstance& a, const RuleInstance& b) {
  return a.rule == b.rule && a.premises == b.premises && a.principal == b.principal;
}

ProofPtr leaf(Sequent s, RuleId r, std::vector<Formula> principal, std::vector<ProofPtr> premises = {}) {
  auto t = std::make_shared<ProofTree>();
  t->conclusion = std::move(s);
  t->rule = r;
  t->principal = std::move(principal);
  t->premises = std::move(premises);
  return t;
}

// The three-node derivation of ⇒ ◇⊥→⊥ built by hand.
ProofPtr n_derivation() {
  auto bot = leaf(S("false |-"), RuleId::BotL, {F("false")});
  auto dia = leaf(S("<>false |- false"), RuleId::DiaLW, {F("<>false")}, {bot});
  return leaf(S("|- <>false -> false"), RuleId::ImpR, {F("<>false -> false")}, {dia});
}

Sequent random_sequent(std::mt19937& rng, LogicId logic) {
  Multiset g = random_multiset(rng, 4, 5, {"p", "q"});
  Succedent d;
  if (logic == LogicId::CK || rng() % 4) d = random_formula(rng, 4, {"p", "q"});
  return Sequent(g, d);
}

// Small perturbations of a legal instance; some stay legal, most do not.
std::vector<RuleInstance> mutants(const RuleInstance& inst, std::mt19937& rng) {
  std::vector<RuleInstance> out;
  for (int r = 0; r < kRuleCount; ++r) {
    RuleInstance m = inst;
    m.rule = static_cast<RuleId>(r);
    out.push_back(m);
  }
  if (inst.premises.size() == 2) {
    RuleInstance m = inst;
    std::swap(m.premises[0], m.premises[1]);
    out.push_back(m);
  }
  for (std::size_t k = 0; k < inst.premises.size(); ++k) {
    RuleInstance m = inst;
    m.premises[k].ante.insert(random_formula(rng, 2, {"p", "q"}));
    out.push_back(m);
    RuleInstance n = inst;
    if (!n.premises[k].ante.empty()) {
      n.premises[k].ante = n.premises[k].ante.without_at(rng() % n.premises[k].ante.size());
      out.push_back(n);
    }
    RuleInstance o = inst;
    o.premises[k].succ = o.premises[k].succ ? Succedent{} : Succedent{F("p")};
    out.push_back(o);
  }
  RuleInstance m = inst;
  m.principal[0] = Formula::box(m.principal[0]);
  out.push_back(m);
  return out;
}

}  // namespace

TEST_SUITE("calculus") {
  TEST_CASE("rule names and logic membership") {
    CHECK(rule_name(RuleId::DiaLW) == "diaL'");
    CHECK(rule_from_name("impImpL") == RuleId::ImpImpL);
    CHECK_FALSE(rule_from_name("cut").has_value());
    CHECK(rule_in_logic(RuleId::DiaL, LogicId::CK));
    CHECK_FALSE(rule_in_logic(RuleId::DiaL, LogicId::WK));
    CHECK(rule_in_logic(RuleId::DiaLW, LogicId::WK));
    CHECK_FALSE(rule_in_logic(RuleId::DiaLW, LogicId::CK));
    CHECK(rule_arity(RuleId::BoxImpL) == 2);
    CHECK(logic_from_name("wk") == LogicId::WK);
    CHECK_FALSE(logic_from_name("k4").has_value());
  }

  TEST_CASE("instance enumeration examples") {
    auto xs = applicable_instances(S("false, p |- q"), LogicId::CK);
    REQUIRE(has_rule(xs, RuleId::BotL));
    CHECK(xs.front().premises.empty());

    auto ys = applicable_instances(S("<>false |- false"), LogicId::WK);
    REQUIRE(ys.size() == 1);
    CHECK(ys[0].rule == RuleId::DiaLW);
    CHECK(ys[0].premises == std::vector<Sequent>{S("false |-")});

    CHECK(applicable_instances(S("|- p"), LogicId::CK).empty());
    CHECK(applicable_instances(S("<>false |- false"), LogicId::CK).empty());

    // ◇→L keeps ◇γ in the right premise.
    auto zs = applicable_instances(S("<>p, <>q -> r, []s |- t"), LogicId::CK);
    REQUIRE(zs.size() == 1);
    CHECK(zs[0].rule == RuleId::DiaImpL);
    CHECK(zs[0].premises[0] == S("s, p |- q"));
    CHECK(zs[0].premises[1] == S("<>p, []s, r |- t"));

    // Duplicate formulas give one instance.
    auto ws = applicable_instances(S("p & q, p & q |- p"), LogicId::CK);
    CHECK(std::count_if(ws.begin(), ws.end(), [](auto& i) { return i.rule == RuleId::AndL; }) == 1);
  }

  TEST_CASE("check_step examples") {
    CHECK(check_step({RuleId::IdP, {}, {F("p")}}, S("p, q |- p"), LogicId::CK));
    CHECK(check_step({RuleId::DiaL, {S("p |- p")}, {F("<>p")}}, S("<>p |- <>p"), LogicId::CK));
    CHECK_FALSE(check_step({RuleId::DiaLW, {S("p |- p")}, {F("<>p")}}, S("<>p |- <>p"), LogicId::CK));
    CHECK(check_step({RuleId::DiaLW, {S("p |- p")}, {F("<>p")}}, S("<>p |- <>p"), LogicId::WK));
    CHECK_FALSE(check_step({RuleId::IdP, {}, {F("p")}}, S("q |- p"), LogicId::CK));
    CHECK_FALSE(check_step({RuleId::BotL, {}, {F("false")}}, S("false |-"), LogicId::CK));
    CHECK(check_step({RuleId::BotL, {}, {F("false")}}, S("false |-"), LogicId::WK));
    CHECK(check_step({RuleId::AtomImpL, {S("p, q |- r")}, {F("p -> q"), F("p")}}, S("p, p -> q |- r"),
                     LogicId::CK));
    CHECK_FALSE(check_step({RuleId::AtomImpL, {S("q |- r")}, {F("p -> q"), F("p")}}, S("p, p -> q |- r"),
                           LogicId::CK));
    CHECK(check_step({RuleId::BoxR, {S("p |- q")}, {F("[]q")}}, S("[]p, <>r, s |- []q"), LogicId::CK));
  }

  TEST_CASE("proof checking") {
    ProofPtr n = n_derivation();
    CHECK(check_proof(*n, LogicId::WK));
    CHECK_FALSE(check_proof(*n, LogicId::CK));
    CHECK(check_proof(*leaf(S("p |- p"), RuleId::IdP, {F("p")}), LogicId::CK));
    CHECK(rule_spine(*n) == std::vector<RuleId>{RuleId::ImpR, RuleId::DiaLW, RuleId::BotL});
    CHECK(proof_size(*n) == 3);
    auto wrong_arity = leaf(S("p |- p & p"), RuleId::AndR, {F("p & p")}, {leaf(S("p |- p"), RuleId::IdP, {F("p")})});
    CHECK_FALSE(check_proof(*wrong_arity, LogicId::CK));
  }

  TEST_CASE("proof serialisation") {
    ProofPtr n = n_derivation();
    auto j = to_json(*n);
    CHECK(j["rule"] == "impR");
    CHECK(j["premises"][0]["rule"] == "diaL'");
    ProofPtr back = proof_from_json(nlohmann::json::parse(j.dump()));
    CHECK(check_proof(*back, LogicId::WK));
    CHECK(to_json(*back) == j);
    CHECK(proof_to_text(*n) ==
          "|- <>false -> false   [impR]\n"
          "  <>false |- false   [diaL']\n"
          "    false |-   [botL]\n");
    CHECK(proof_to_latex(*leaf(S("p |- p"), RuleId::IdP, {F("p")})) == "\\infer[\\mathrm{IdP}]{p \\Rightarrow p}{}");
  }

  TEST_CASE("enumeration and forward checking agree") {
    std::mt19937 rng(23);
    for (LogicId logic : {LogicId::CK, LogicId::WK}) {
      for (int i = 0; i < 1500; ++i) {
        Sequent s = random_sequent(rng, logic);
        auto xs = applicable_instances(s, logic);
        for (const auto& inst : xs) {
          REQUIRE_MESSAGE(check_step(inst, s, logic), s.to_string() << " " << rule_name(inst.rule));
          for (const auto& m : mutants(inst, rng)) {
            if (!check_step(m, s, logic)) continue;
            bool listed = std::any_of(xs.begin(), xs.end(), [&](const auto& x) { return same_instance(x, m); });
            REQUIRE_MESSAGE(listed, s.to_string() << " " << rule_name(m.rule));
          }
        }
      }
    }
  }

  TEST_CASE("premises descend in the sequent order") {
    std::mt19937 rng(29);
    for (LogicId logic : {LogicId::CK, LogicId::WK})
      for (int i = 0; i < 2000; ++i) {
        Sequent s = random_sequent(rng, logic);
        for (const auto& inst : applicable_instances(s, logic))
          for (const auto& p : inst.premises) REQUIRE_MESSAGE(seq_less(p, s), s.to_string() << " / " << p.to_string());
      }
  }

  TEST_CASE("CK proofs become WK proofs after relabelling diamond-left") {
    std::mt19937 rng(31);
    std::function<ProofPtr(const ProofPtr&)> relabel = [&](const ProofPtr& t) {
      auto u = std::make_shared<ProofTree>(*t);
      if (u->rule == RuleId::DiaL) u->rule = RuleId::DiaLW;
      for (auto& p : u->premises) p = relabel(p);
      return ProofPtr(u);
    };
    int checked = 0;
    for (int i = 0; i < 3000; ++i) {
      Sequent s = random_sequent(rng, LogicId::CK);
      Decision d = decide(s, LogicId::CK);
      if (!d) continue;
      ++checked;
      REQUIRE(check_proof(*relabel(d.proof()), LogicId::WK));
    }
    CHECK(checked > 100);
  }
}
