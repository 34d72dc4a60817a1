#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g4uip/sequent.hpp"

namespace g4uip {

enum class LogicId { CK, WK };

std::string_view logic_name(LogicId logic);
std::optional<LogicId> logic_from_name(std::string_view name);

// Rules of G4CK / G4WK. DiaL belongs to CK only, DiaLW (◇L′) to WK only.
enum class RuleId {
  BotL,
  IdP,
  AndL,
  AndR,
  OrL,
  OrR1,
  OrR2,
  ImpR,
  AndImpL,
  OrImpL,
  AtomImpL,
  ImpImpL,
  BoxR,
  BoxImpL,
  DiaImpL,
  DiaL,
  DiaLW,
};

inline constexpr int kRuleCount = 17;

std::string_view rule_name(RuleId rule);
std::string_view rule_latex(RuleId rule);
std::optional<RuleId> rule_from_name(std::string_view name);
bool rule_in_logic(RuleId rule, LogicId logic);
int rule_arity(RuleId rule);

// CK needs exactly one succedent formula; WK allows at most one.
bool respects_regime(const Sequent& s, LogicId logic);

struct RuleInstance {
  RuleId rule;
  std::vector<Sequent> premises;
  // The matched formulas: the principal formula first, then any side formula
  // the rule requires to be present (the atom of p→L, the ◇γ of ◇→L).
  std::vector<Formula> principal;
};

// Every way a rule of the logic can conclude s, in rule-table order.
// Equal formulas are matched once regardless of multiplicity.
std::vector<RuleInstance> applicable_instances(const Sequent& s, LogicId logic);

// Feeds the instances of one rule to visit, in the same order; stops early and
// returns true once visit returns true.
using InstanceVisitor = std::function<bool(RuleInstance&)>;
bool for_each_instance(const Sequent& s, LogicId logic, RuleId rule, const InstanceVisitor& visit);

// Forward check that inst is a legal application concluding `conclusion`.
bool check_step(const RuleInstance& inst, const Sequent& conclusion, LogicId logic);

struct ProofTree;
using ProofPtr = std::shared_ptr<const ProofTree>;

struct ProofTree {
  Sequent conclusion;
  RuleId rule;
  std::vector<Formula> principal;
  std::vector<ProofPtr> premises;
};

bool check_proof(const ProofTree& t, LogicId logic);

// Rule names along the leftmost path, root first.
std::vector<RuleId> rule_spine(const ProofTree& t);
std::size_t proof_size(const ProofTree& t);

nlohmann::json to_json(const ProofTree& t);
ProofPtr proof_from_json(const nlohmann::json& j);
std::string proof_to_text(const ProofTree& t);
std::string proof_to_latex(const ProofTree& t);

}  // namespace g4uip
