#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "g4uip/calculus.hpp"

namespace g4uip {

class RegimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the pruned search when a sequent needs a deeper search than a
// default thread stack allows. Never a verdict.
class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Decision {
 public:
  static Decision provable(ProofPtr proof) { return Decision(std::move(proof)); }
  static Decision unprovable() { return Decision(nullptr); }

  bool is_provable() const { return proof_ != nullptr; }
  explicit operator bool() const { return is_provable(); }
  const ProofPtr& proof() const { return proof_; }

 private:
  explicit Decision(ProofPtr p) : proof_(std::move(p)) {}
  ProofPtr proof_;
};

// Exhaustive backtracks over every rule instance in a fixed order and is the
// reference. Pruned decides on sets of formulas (contraction and weakening are
// admissible), applies invertible rules without backtracking, and deepens the
// search bound iteratively; decide() then rebuilds a proof along instances
// whose premises are already known to be provable. Both give the same
// verdicts; proofs may differ.
enum class Strategy { Pruned, Exhaustive };

// Memo tables of decided sequents, one per logic: proofs for decide(), with
// null for unprovable, and bare verdicts for provable(). Not synchronised:
// share only within one thread.
class SearchCache {
 public:
  explicit SearchCache(Strategy strategy = Strategy::Pruned) : strategy_(strategy) {}
  Strategy strategy() const { return strategy_; }

  const ProofPtr* find(const Sequent& s, LogicId logic) const;
  void store(const Sequent& s, LogicId logic, ProofPtr proof);
  // A provable verdict carries a core: antecedent formulas that already
  // prove the succedent on their own.
  struct Verdict {
    bool provable;
    std::vector<Formula> core;
  };
  const Verdict* find_verdict(const Sequent& s, LogicId logic) const;
  void store_verdict(const Sequent& s, LogicId logic, Verdict verdict);
  // Largest depth bound under which a verdict search on s came back undecided.
  int undecided_depth(const Sequent& s, LogicId logic) const;
  void store_undecided(const Sequent& s, LogicId logic, int depth);
  std::size_t size() const {
    return tables_[0].size() + tables_[1].size() + verdicts_[0].size() + verdicts_[1].size();
  }
  void clear();

 private:
  Strategy strategy_;
  std::array<std::unordered_map<Sequent, ProofPtr, SequentHash>, 2> tables_;
  std::array<std::unordered_map<Sequent, Verdict, SequentHash>, 2> verdicts_;
  std::array<std::unordered_map<Sequent, int, SequentHash>, 2> undecided_;
};

// Backward proof search with the cache's strategy. Throws RegimeError when s
// has an empty succedent under CK, and SearchLimitError as described above.
Decision decide(const Sequent& s, LogicId logic, SearchCache& cache);
Decision decide(const Sequent& s, LogicId logic);

bool provable(const Sequent& s, LogicId logic, SearchCache& cache);
bool provable(const Sequent& s, LogicId logic);

// ⊢ φ → ψ and ⊢ ψ → φ.
bool equivalent(Formula a, Formula b, LogicId logic, SearchCache& cache);

// False exactly when Γ ⇒ φ and φ,Γ ⇒ Δ are provable but Γ ⇒ Δ is not.
bool admissible_cut_holds(const Multiset& gamma, Formula phi, const Succedent& delta,
                          LogicId logic, SearchCache& cache);
bool admissible_cut_holds(const Multiset& gamma, Formula phi, const Succedent& delta,
                          LogicId logic);

}  // namespace g4uip
