#include "g4uip/search.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>

namespace g4uip {

const ProofPtr* SearchCache::find(const Sequent& s, LogicId logic) const {
  const auto& table = tables_[static_cast<std::size_t>(logic)];
  auto it = table.find(s);
  return it == table.end() ? nullptr : &it->second;
}

void SearchCache::store(const Sequent& s, LogicId logic, ProofPtr proof) {
  tables_[static_cast<std::size_t>(logic)].emplace(s, std::move(proof));
}

const SearchCache::Verdict* SearchCache::find_verdict(const Sequent& s, LogicId logic) const {
  const auto& table = verdicts_[static_cast<std::size_t>(logic)];
  auto it = table.find(s);
  return it == table.end() ? nullptr : &it->second;
}

void SearchCache::store_verdict(const Sequent& s, LogicId logic, Verdict verdict) {
  verdicts_[static_cast<std::size_t>(logic)].emplace(s, std::move(verdict));
}

int SearchCache::undecided_depth(const Sequent& s, LogicId logic) const {
  const auto& table = undecided_[static_cast<std::size_t>(logic)];
  auto it = table.find(s);
  return it == table.end() ? -1 : it->second;
}

void SearchCache::store_undecided(const Sequent& s, LogicId logic, int depth) {
  int& d = undecided_[static_cast<std::size_t>(logic)][s];
  d = std::max(d, depth);
}

void SearchCache::clear() {
  for (auto& t : tables_) t.clear();
  for (auto& t : verdicts_) t.clear();
  for (auto& t : undecided_) t.clear();
}

namespace {

// Zero-premise rules, then the single-premise propositional left rules, then
// everything else in rule-table order.
constexpr std::array<RuleId, kRuleCount> kSearchOrder{
    RuleId::BotL,    RuleId::IdP,     RuleId::AndL,    RuleId::AndImpL, RuleId::OrImpL, RuleId::AtomImpL,
    RuleId::AndR,    RuleId::OrL,     RuleId::OrR1,    RuleId::OrR2,    RuleId::ImpR,   RuleId::ImpImpL,
    RuleId::BoxR,    RuleId::BoxImpL, RuleId::DiaImpL, RuleId::DiaL,    RuleId::DiaLW,
};

ProofPtr make_node(const Sequent& s, RuleInstance& inst, std::vector<ProofPtr> subproofs) {
  auto node = std::make_shared<ProofTree>();
  node->conclusion = s;
  node->rule = inst.rule;
  node->principal = std::move(inst.principal);
  node->premises = std::move(subproofs);
  return node;
}

// Backtracking over every instance in kSearchOrder.
ProofPtr prove_exhaustive(const Sequent& s, LogicId logic, SearchCache& cache) {
  if (const ProofPtr* hit = cache.find(s, logic)) return *hit;
  ProofPtr result;
  auto attempt = [&](RuleInstance& inst) {
    std::vector<ProofPtr> subproofs;
    subproofs.reserve(inst.premises.size());
    for (const auto& premise : inst.premises) {
      ProofPtr sub = prove_exhaustive(premise, logic, cache);
      if (!sub) return false;
      subproofs.push_back(std::move(sub));
    }
    result = make_node(s, inst, std::move(subproofs));
    return true;
  };
  for (RuleId rule : kSearchOrder)
    if (for_each_instance(s, logic, rule, attempt)) break;
  cache.store(s, logic, result);
  return result;
}

// Applies →R, ∧L and p→L until none fits, on sets. Each is invertible with a
// single premise and adds no new formula, so the result is provable iff the
// input is. Every kept formula records the input formulas it came from, and a
// sequent closed by ⊥L or IdP records the formulas that close it.
struct Saturated {
  bool closed = false;
  Sequent s;
  std::vector<Formula> closing;
  std::unordered_map<Formula, std::vector<Formula>> origin;
};

Saturated saturate(const Sequent& in) {
  Saturated out;
  auto& origin = out.origin;
  std::vector<Formula> todo;
  for (Formula f : in.ante)
    if (origin.emplace(f, std::vector<Formula>{f}).second) todo.push_back(f);
  Succedent succ = in.succ;
  while (succ && succ->is(Kind::Imp)) {
    if (origin.emplace(succ->lhs(), std::vector<Formula>{}).second) todo.push_back(succ->lhs());
    succ = succ->rhs();
  }
  auto derive = [&](Formula f, std::vector<Formula> from) {
    if (origin.emplace(f, std::move(from)).second) todo.push_back(f);
  };
  std::unordered_set<Formula> atoms;
  std::vector<Formula> kept;
  for (;;) {
    while (!todo.empty()) {
      Formula f = todo.back();
      todo.pop_back();
      if (f.is(Kind::Bot)) {
        out.closed = true;
        out.closing = origin[f];
        return out;
      }
      if (f.is(Kind::And)) {
        derive(f.lhs(), origin[f]);
        derive(f.rhs(), origin[f]);
        continue;
      }
      if (f.is_var()) atoms.insert(f);
      kept.push_back(f);
    }
    std::size_t before = kept.size();
    std::erase_if(kept, [&](Formula f) {
      if (!f.is(Kind::Imp) || !atoms.count(f.lhs())) return false;
      std::vector<Formula> from = origin[f];
      const auto& extra = origin[f.lhs()];
      from.insert(from.end(), extra.begin(), extra.end());
      derive(f.rhs(), std::move(from));
      return true;
    });
    if (kept.size() == before) break;
  }
  if (succ && succ->is_var() && atoms.count(*succ)) {
    out.closed = true;
    out.closing = origin[*succ];
    return out;
  }
  out.s = Sequent(Multiset(std::move(kept)), succ);
  return out;
}

// Goal-directed verdict search. After saturation:
//   - ∧R is applied if it fits (invertible).
//   - →→L, □→L and ◇→L: the right premise Γ,χ ⇒ Δ is invertible because χ
//     proves the principal formula and cut is admissible. So once the left
//     premise of an instance is proved the instance decides, and an instance
//     whose left premise fails is dead. Modal ones go first: their left
//     premises keep only the boxed part of the context.
//   - The genuine choices follow: □R, ◇L, ◇L′, ∨R.
//   - Last, the first instance of ∨L, ∧→L or ∨→L decides. Those are
//     invertible, so postponing them loses nothing, and a proof that never
//     touches a large antecedent formula is found without expanding it.
//
// Provable answers carry a core (see SearchCache::Verdict). When a premise with
// the conclusion's succedent is proved by formulas all present in the
// conclusion, weakening proves the conclusion too and the remaining premises
// are skipped; this prunes case splits on formulas a proof never uses.
//
// The search is depth bounded. Unknown means the bound was hit somewhere that
// mattered; only definite verdicts are cached.
constexpr std::array<RuleId, 3> kGuarded{RuleId::BoxImpL, RuleId::DiaImpL, RuleId::ImpImpL};
constexpr std::array<RuleId, 5> kChoices{RuleId::BoxR, RuleId::DiaL, RuleId::DiaLW, RuleId::OrR1, RuleId::OrR2};
constexpr std::array<RuleId, 3> kDeferred{RuleId::OrL, RuleId::AndImpL, RuleId::OrImpL};

enum class Verdict : std::uint8_t { No, Yes, Unknown };

struct Outcome {
  Verdict verdict = Verdict::No;
  std::vector<Formula> core;
};

// Premise 0 of these rules has the boxed part of the context only.
bool modal_premise(RuleId rule, std::size_t index) {
  switch (rule) {
    case RuleId::BoxR:
    case RuleId::DiaL:
    case RuleId::DiaLW:
      return true;
    case RuleId::BoxImpL:
    case RuleId::DiaImpL:
      return index == 0;
    default:
      return false;
  }
}

bool sorted_contains(const Multiset& m, Formula f) {
  return std::binary_search(m.begin(), m.end(), f, FormulaLess{});
}

Outcome holds(const Sequent& raw, LogicId logic, SearchCache& cache, int depth);

// The premises of inst, combined. A provable core holds formulas of s.ante.
Outcome premises(const Sequent& s, const RuleInstance& inst, LogicId logic, SearchCache& cache, int depth) {
  Outcome out{Verdict::Yes, {}};
  for (std::size_t i = 0; i < inst.premises.size(); ++i) {
    const Sequent& premise = inst.premises[i];
    Outcome p = holds(premise, logic, cache, depth - 1);
    // An undecided premise leaves the instance undecided at this bound;
    // the next bound settles it.
    if (p.verdict != Verdict::Yes) return p;
    bool modal = modal_premise(inst.rule, i);
    bool inherited = true;
    for (Formula f : p.core) {
      Formula g = modal ? Formula::box(f) : f;
      if (sorted_contains(s.ante, g)) out.core.push_back(g);
      else inherited = false;
    }
    if (inherited && !modal && premise.succ == s.succ) return {Verdict::Yes, std::move(p.core)};
  }
  for (Formula f : inst.principal)
    if (sorted_contains(s.ante, f)) out.core.push_back(f);
  return out;
}

Outcome expand(const Sequent& s, LogicId logic, SearchCache& cache, int depth) {
  Outcome out;
  auto commit = [&](RuleId rule) {
    return for_each_instance(s, logic, rule, [&](RuleInstance& inst) {
      out = premises(s, inst, logic, cache, depth);
      return true;
    });
  };
  if (commit(RuleId::AndR)) return out;

  bool undecided = false;
  for (RuleId rule : kGuarded) {
    bool decided = for_each_instance(s, logic, rule, [&](RuleInstance& inst) {
      Outcome left = holds(inst.premises[0], logic, cache, depth - 1);
      if (left.verdict == Verdict::Unknown) undecided = true;
      if (left.verdict != Verdict::Yes) return false;
      out = premises(s, inst, logic, cache, depth);
      return true;
    });
    if (decided) return out;
  }
  for (RuleId rule : kChoices) {
    bool found = for_each_instance(s, logic, rule, [&](RuleInstance& inst) {
      Outcome p = premises(s, inst, logic, cache, depth);
      if (p.verdict == Verdict::Unknown) undecided = true;
      if (p.verdict != Verdict::Yes) return false;
      out = std::move(p);
      return true;
    });
    if (found) return out;
  }
  for (RuleId rule : kDeferred)
    if (commit(rule)) return out;
  return {undecided ? Verdict::Unknown : Verdict::No, {}};
}

Outcome holds(const Sequent& raw, LogicId logic, SearchCache& cache, int depth) {
  Saturated sat = saturate(raw);
  if (sat.closed) return {Verdict::Yes, std::move(sat.closing)};
  const Sequent& s = sat.s;

  Outcome out;
  if (const auto* hit = cache.find_verdict(s, logic)) {
    out = {hit->provable ? Verdict::Yes : Verdict::No, hit->core};
  } else {
    if (depth == 0 || depth <= cache.undecided_depth(s, logic)) return {Verdict::Unknown, {}};
    out = expand(s, logic, cache, depth);
    if (out.verdict == Verdict::Unknown) {
      cache.store_undecided(s, logic, depth);
      return out;
    }
    std::sort(out.core.begin(), out.core.end(), FormulaLess{});
    out.core.erase(std::unique(out.core.begin(), out.core.end()), out.core.end());
    cache.store_verdict(s, logic, {out.verdict == Verdict::Yes, out.core});
  }
  if (out.verdict != Verdict::Yes) return out;

  // Back to formulas of the raw antecedent.
  std::vector<Formula> core;
  for (Formula f : out.core) {
    const auto& from = sat.origin[f];
    core.insert(core.end(), from.begin(), from.end());
  }
  std::sort(core.begin(), core.end(), FormulaLess{});
  core.erase(std::unique(core.begin(), core.end()), core.end());
  return {Verdict::Yes, std::move(core)};
}

// Iterative deepening. The last bound keeps the recursion within a default
// thread stack.
constexpr std::array<int, 6> kDepthBounds{8, 32, 128, 512, 2048, 4096};

bool settled(const Sequent& s, LogicId logic, SearchCache& cache) {
  for (int bound : kDepthBounds) {
    Verdict v = holds(s, logic, cache, bound).verdict;
    if (v != Verdict::Unknown) return v == Verdict::Yes;
  }
  throw SearchLimitError("search depth limit reached: " + std::to_string(s.ante.size()) +
                         " antecedent formulas");
}

// Proof of a sequent already known to be provable: the first instance, in the
// verdict search's order, whose premises are all provable. Such an instance
// exists because the sequent is derivable, so nothing is retracted.
constexpr std::array<RuleId, kRuleCount> kProofOrder{
    RuleId::BotL,    RuleId::IdP,    RuleId::AndL,    RuleId::ImpR,    RuleId::AtomImpL, RuleId::AndR,
    RuleId::BoxImpL, RuleId::DiaImpL, RuleId::ImpImpL, RuleId::BoxR,   RuleId::DiaL,     RuleId::DiaLW,
    RuleId::OrR1,    RuleId::OrR2,   RuleId::OrL,     RuleId::AndImpL, RuleId::OrImpL,
};

ProofPtr prove_guided(const Sequent& s, LogicId logic, SearchCache& cache) {
  if (const ProofPtr* hit = cache.find(s, logic)) return *hit;
  ProofPtr result;
  for (RuleId rule : kProofOrder) {
    bool found = for_each_instance(s, logic, rule, [&](RuleInstance& inst) {
      for (const auto& premise : inst.premises)
        if (!settled(premise, logic, cache)) return false;
      std::vector<ProofPtr> subproofs;
      for (const auto& premise : inst.premises) subproofs.push_back(prove_guided(premise, logic, cache));
      result = make_node(s, inst, std::move(subproofs));
      return true;
    });
    if (found) break;
  }
  cache.store(s, logic, result);
  return result;
}

}  // namespace

Decision decide(const Sequent& s, LogicId logic, SearchCache& cache) {
  if (!respects_regime(s, logic))
    throw RegimeError("CK sequents need exactly one succedent formula: " + s.to_string());
  if (cache.strategy() == Strategy::Exhaustive) {
    ProofPtr p = prove_exhaustive(s, logic, cache);
    return p ? Decision::provable(std::move(p)) : Decision::unprovable();
  }
  if (!settled(s, logic, cache)) return Decision::unprovable();
  return Decision::provable(prove_guided(s, logic, cache));
}

Decision decide(const Sequent& s, LogicId logic) {
  SearchCache cache;
  return decide(s, logic, cache);
}

bool provable(const Sequent& s, LogicId logic, SearchCache& cache) {
  if (cache.strategy() == Strategy::Exhaustive) return decide(s, logic, cache).is_provable();
  if (!respects_regime(s, logic))
    throw RegimeError("CK sequents need exactly one succedent formula: " + s.to_string());
  return settled(s, logic, cache);
}

bool provable(const Sequent& s, LogicId logic) {
  SearchCache cache;
  return provable(s, logic, cache);
}

bool equivalent(Formula a, Formula b, LogicId logic, SearchCache& cache) {
  return provable(Sequent(Multiset{a}, b), logic, cache) &&
         provable(Sequent(Multiset{b}, a), logic, cache);
}

bool admissible_cut_holds(const Multiset& gamma, Formula phi, const Succedent& delta,
                          LogicId logic, SearchCache& cache) {
  if (!provable(Sequent(gamma, phi), logic, cache)) return true;
  if (!provable(Sequent(gamma.with(phi), delta), logic, cache)) return true;
  return provable(Sequent(gamma, delta), logic, cache);
}

bool admissible_cut_holds(const Multiset& gamma, Formula phi, const Succedent& delta,
                          LogicId logic) {
  SearchCache cache;
  return admissible_cut_holds(gamma, phi, delta, logic, cache);
}

}  // namespace g4uip
