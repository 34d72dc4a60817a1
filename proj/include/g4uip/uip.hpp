#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "g4uip/calculus.hpp"

namespace g4uip {

// Memo tables for the 𝓔/𝒜 construction, keyed per (logic, variable) and
// then by canonical antecedent / sequent. Not synchronised.
class QuantCache {
 public:
  struct Entry {
    std::vector<Formula> set;  // sorted by the total formula order, no duplicates
    Formula folded;
  };
  struct Tables {
    std::unordered_map<Multiset, Entry, MultisetHash> e;
    std::unordered_map<Sequent, Entry, SequentHash> a;
  };

  Tables& tables(LogicId logic, std::string_view var);
  std::size_t size() const;
  void clear() { tables_.clear(); }

  // When set, every recursive call is checked to descend in the sequent
  // order and a std::logic_error is thrown otherwise.
  bool check_descent = false;

 private:
  std::map<std::pair<LogicId, std::string>, Tables> tables_;
};

const std::vector<Formula>& e_set(const Multiset& gamma, std::string_view p, LogicId logic,
                                  QuantCache& cache);
const std::vector<Formula>& a_set(const Sequent& s, std::string_view p, LogicId logic,
                                  QuantCache& cache);

// ⋀𝓔ₚ(Γ) and ⋁𝒜ₚ(s), right-nested over the total order; ⋀∅ = ⊤, ⋁∅ = ⊥.
Formula e_quant(const Multiset& gamma, std::string_view p, LogicId logic, QuantCache& cache);
Formula a_quant(const Sequent& s, std::string_view p, LogicId logic, QuantCache& cache);

Formula big_and(const std::vector<Formula>& sorted);
Formula big_or(const std::vector<Formula>& sorted);

// ∃pφ := Ep({φ}) and ∀pφ := Ap(⇒ φ).
Formula interpolate_exists(Formula phi, std::string_view p, LogicId logic, QuantCache& cache);
Formula interpolate_exists(Formula phi, std::string_view p, LogicId logic);
Formula interpolate_forall(Formula phi, std::string_view p, LogicId logic, QuantCache& cache);
Formula interpolate_forall(Formula phi, std::string_view p, LogicId logic);

// ∀q(∀p(φ→q)→q) for a variable q fresh for φ and p.
Formula exists_via_forall(Formula phi, std::string_view p, LogicId logic, QuantCache& cache);
Formula exists_via_forall(Formula phi, std::string_view p, LogicId logic);
std::string fresh_variable(Formula phi, std::string_view avoid);

// Unit laws only: x∧⊤, x∨⊥, ⊤→x, x→⊤, ⊥∧x, ⊤∨x (both argument orders).
Formula simplify(Formula phi);

}  // namespace g4uip
