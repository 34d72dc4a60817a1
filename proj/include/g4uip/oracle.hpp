#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "g4uip/calculus.hpp"

namespace g4uip {

struct EnumConfig {
  std::vector<std::string> alphabet{"p", "q"};
  int max_weight = 3;
  int max_context = 2;
  // Weight bound for context and succedent formulas in check_structural.
  // Zero means "same as max_weight".
  int side_weight = 0;

  int effective_side_weight() const { return side_weight > 0 ? side_weight : max_weight; }
};

struct Report {
  static constexpr std::size_t kMaxRecorded = 50;

  std::string property;
  std::uint64_t checked = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;  // the first kMaxRecorded counterexamples
  std::vector<std::string> notes;
  double elapsed_seconds = 0;

  bool passed() const { return failure_count == 0; }
  void fail(std::string what);
  void merge(const Report& other);
};

nlohmann::json to_json(const Report& r);

// All formulas over the alphabet of weight ≤ max_weight, ordered by weight and
// then by the total formula order.
std::vector<Formula> enumerate_formulas(const EnumConfig& cfg);
std::vector<Formula> enumerate_formulas(const std::vector<std::string>& alphabet, int max_weight);

// Multisets of size ≤ max_size drawn from pool, with repetition.
std::vector<Multiset> enumerate_multisets(const std::vector<Formula>& pool, int max_size);

enum class StructuralRule { Wk, Id, ImpL, Cntr, Cut };

std::string_view structural_rule_name(StructuralRule r);
std::optional<StructuralRule> structural_rule_from_name(std::string_view name);

// Γ = {phi}. Π ranges over multisets of size ≤ max_context of formulas over
// alphabet∖{p} with weight ≤ max_weight; Δ over all formulas on alphabet∪{p}
// with weight ≤ max_weight (and the empty succedent under WK). Clause (a) is
// only checked for p-free Δ.
Report check_uniformity(Formula phi, std::string_view p, LogicId logic, const EnumConfig& cfg);

// The distinguished formula (weakened, identity, implication, contracted or
// cut formula) ranges up to max_weight; contexts have at most max_context
// members and, like succedents, weight ≤ effective_side_weight().
Report check_structural(StructuralRule rule, LogicId logic, const EnumConfig& cfg);

// Instances of A1–A9, K□, K◇ over {p,q,r,p∧q,p∨q,p→q,□p,◇p}; N is required
// provable under WK and unprovable under CK.
Report check_hilbert_axioms(LogicId logic);

}  // namespace g4uip
