#include "g4uip/calculus.hpp"

#include <array>
#include <unordered_set>

namespace g4uip {

namespace {

struct RuleInfo {
  RuleId id;
  std::string_view name;
  std::string_view latex;
  int arity;
};

constexpr std::array<RuleInfo, kRuleCount> kRules{{
    {RuleId::BotL, "botL", "\\bot L", 0},
    {RuleId::IdP, "IdP", "\\mathrm{IdP}", 0},
    {RuleId::AndL, "andL", "\\wedge L", 1},
    {RuleId::AndR, "andR", "\\wedge R", 2},
    {RuleId::OrL, "orL", "\\vee L", 2},
    {RuleId::OrR1, "orR1", "\\vee R_1", 1},
    {RuleId::OrR2, "orR2", "\\vee R_2", 1},
    {RuleId::ImpR, "impR", "\\to R", 1},
    {RuleId::AndImpL, "andImpL", "\\wedge\\!\\to L", 1},
    {RuleId::OrImpL, "orImpL", "\\vee\\!\\to L", 1},
    {RuleId::AtomImpL, "atomImpL", "p\\!\\to L", 1},
    {RuleId::ImpImpL, "impImpL", "\\to\\to L", 2},
    {RuleId::BoxR, "boxR", "\\Box R", 1},
    {RuleId::BoxImpL, "boxImpL", "\\Box\\!\\to L", 2},
    {RuleId::DiaImpL, "diaImpL", "\\Diamond\\!\\to L", 2},
    {RuleId::DiaL, "diaL", "\\Diamond L", 1},
    {RuleId::DiaLW, "diaL'", "\\Diamond L'", 1},
}};

const RuleInfo& info(RuleId r) { return kRules[static_cast<std::size_t>(r)]; }

}  // namespace

std::string_view logic_name(LogicId logic) { return logic == LogicId::CK ? "ck" : "wk"; }

std::optional<LogicId> logic_from_name(std::string_view name) {
  if (name == "ck" || name == "CK") return LogicId::CK;
  if (name == "wk" || name == "WK") return LogicId::WK;
  return std::nullopt;
}

std::string_view rule_name(RuleId rule) { return info(rule).name; }
std::string_view rule_latex(RuleId rule) { return info(rule).latex; }
int rule_arity(RuleId rule) { return info(rule).arity; }

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& r : kRules)
    if (r.name == name) return r.id;
  return std::nullopt;
}

bool rule_in_logic(RuleId rule, LogicId logic) {
  if (rule == RuleId::DiaL) return logic == LogicId::CK;
  if (rule == RuleId::DiaLW) return logic == LogicId::WK;
  return true;
}

bool respects_regime(const Sequent& s, LogicId logic) {
  return logic == LogicId::WK || s.succ.has_value();
}

bool for_each_instance(const Sequent& s, LogicId logic, RuleId rule, const InstanceVisitor& visit) {
  if (!rule_in_logic(rule, logic)) return false;
  const Multiset& gamma = s.ante;
  const Succedent& delta = s.succ;
  auto emit = [&](std::vector<Sequent> premises, std::vector<Formula> principal) {
    RuleInstance inst{rule, std::move(premises), std::move(principal)};
    return visit(inst);
  };

  // Right rules look only at the succedent.
  switch (rule) {
    case RuleId::AndR:
      return delta && delta->is(Kind::And) &&
             emit({Sequent(gamma, delta->lhs()), Sequent(gamma, delta->rhs())}, {*delta});
    case RuleId::OrR1:
      return delta && delta->is(Kind::Or) && emit({Sequent(gamma, delta->lhs())}, {*delta});
    case RuleId::OrR2:
      return delta && delta->is(Kind::Or) && emit({Sequent(gamma, delta->rhs())}, {*delta});
    case RuleId::ImpR:
      return delta && delta->is(Kind::Imp) &&
             emit({Sequent(gamma.with(delta->lhs()), delta->rhs())}, {*delta});
    case RuleId::BoxR:
      return delta && delta->is(Kind::Box) &&
             emit({Sequent(box_inverse(gamma), delta->body())}, {*delta});
    default:
      break;
  }

  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (i > 0 && gamma[i] == gamma[i - 1]) continue;
    Formula f = gamma[i];
    bool stop = false;
    switch (rule) {
      case RuleId::BotL:
        stop = f.is(Kind::Bot) && emit({}, {f});
        break;
      case RuleId::IdP:
        stop = f.is_var() && delta && *delta == f && emit({}, {f});
        break;
      case RuleId::AndL:
        if (f.is(Kind::And))
          stop = emit({Sequent(gamma.without_at(i).with(f.lhs(), f.rhs()), delta)}, {f});
        break;
      case RuleId::OrL:
        if (f.is(Kind::Or)) {
          Multiset rest = gamma.without_at(i);
          stop = emit({Sequent(rest.with(f.lhs()), delta), Sequent(rest.with(f.rhs()), delta)}, {f});
        }
        break;
      case RuleId::DiaL:
        if (f.is(Kind::Dia) && delta && delta->is(Kind::Dia))
          stop = emit({Sequent(box_inverse(gamma.without_at(i)).with(f.body()), delta->body())}, {f});
        break;
      case RuleId::DiaLW:
        if (f.is(Kind::Dia))
          stop = emit({Sequent(box_inverse(gamma.without_at(i)).with(f.body()), dia_inverse_succ(delta))},
                      {f});
        break;
      default: {
        if (!f.is(Kind::Imp)) break;
        Formula a = f.lhs(), b = f.rhs();
        switch (rule) {
          case RuleId::AtomImpL:
            if (a.is_var()) {
              Multiset rest = gamma.without_at(i);
              if (rest.contains(a)) stop = emit({Sequent(rest.with(b), delta)}, {f, a});
            }
            break;
          case RuleId::AndImpL:
            if (a.is(Kind::And))
              stop = emit({Sequent(gamma.without_at(i).with(Formula::imp(a.lhs(), Formula::imp(a.rhs(), b))),
                                   delta)},
                          {f});
            break;
          case RuleId::OrImpL:
            if (a.is(Kind::Or))
              stop = emit({Sequent(gamma.without_at(i).with(Formula::imp(a.lhs(), b), Formula::imp(a.rhs(), b)),
                                   delta)},
                          {f});
            break;
          case RuleId::ImpImpL:
            if (a.is(Kind::Imp)) {
              Multiset rest = gamma.without_at(i);
              stop = emit({Sequent(rest.with(Formula::imp(a.rhs(), b)), a), Sequent(rest.with(b), delta)}, {f});
            }
            break;
          case RuleId::BoxImpL:
            if (a.is(Kind::Box)) {
              Multiset rest = gamma.without_at(i);
              stop = emit({Sequent(box_inverse(rest), a.body()), Sequent(rest.with(b), delta)}, {f});
            }
            break;
          case RuleId::DiaImpL:
            if (a.is(Kind::Dia)) {
              Multiset rest = gamma.without_at(i);
              Multiset boxed = box_inverse(rest);
              Sequent right(rest.with(b), delta);
              for (std::size_t j = 0; j < rest.size() && !stop; ++j) {
                if (j > 0 && rest[j] == rest[j - 1]) continue;
                Formula g = rest[j];
                if (g.is(Kind::Dia)) stop = emit({Sequent(boxed.with(g.body()), a.body()), right}, {f, g});
              }
            }
            break;
          default:
            break;
        }
      }
    }
    if (stop) return true;
  }
  return false;
}

std::vector<RuleInstance> applicable_instances(const Sequent& s, LogicId logic) {
  std::vector<RuleInstance> out;
  for (const auto& r : kRules)
    for_each_instance(s, logic, r.id, [&](RuleInstance& inst) {
      out.push_back(std::move(inst));
      return false;
    });
  return out;
}

namespace {

// Γ with one copy of each listed formula removed; nullopt if one is missing.
std::optional<Multiset> remove_all(Multiset m, std::initializer_list<Formula> fs) {
  for (Formula f : fs)
    if (!m.erase_one(f)) return std::nullopt;
  return m;
}

bool premise_is(const Sequent& premise, const Multiset& ante, const Succedent& succ) {
  return premise.succ == succ && premise.ante == ante;
}

}  // namespace

bool check_step(const RuleInstance& inst, const Sequent& conclusion, LogicId logic) {
  if (!rule_in_logic(inst.rule, logic)) return false;
  if (static_cast<int>(inst.premises.size()) != rule_arity(inst.rule)) return false;
  if (!respects_regime(conclusion, logic)) return false;
  for (const auto& p : inst.premises)
    if (!respects_regime(p, logic)) return false;
  if (inst.principal.empty()) return false;

  const Formula f = inst.principal[0];
  const Multiset& gamma = conclusion.ante;
  const Succedent& delta = conclusion.succ;
  const auto& prem = inst.premises;
  const bool right_rule = inst.rule == RuleId::AndR || inst.rule == RuleId::OrR1 ||
                          inst.rule == RuleId::OrR2 || inst.rule == RuleId::ImpR ||
                          inst.rule == RuleId::BoxR;
  const std::size_t want_principal =
      (inst.rule == RuleId::AtomImpL || inst.rule == RuleId::DiaImpL) ? 2 : 1;
  if (inst.principal.size() != want_principal) return false;
  if (right_rule && delta != f) return false;
  if (!right_rule && !gamma.contains(f)) return false;

  switch (inst.rule) {
    case RuleId::BotL:
      return f.is(Kind::Bot);
    case RuleId::IdP:
      return f.is_var() && delta == f;
    case RuleId::AndL: {
      if (!f.is(Kind::And) || prem[0].succ != delta) return false;
      auto back = remove_all(prem[0].ante, {f.lhs(), f.rhs()});
      return back && back->with(f) == gamma;
    }
    case RuleId::OrL: {
      if (!f.is(Kind::Or)) return false;
      for (int k = 0; k < 2; ++k) {
        Formula side = k == 0 ? f.lhs() : f.rhs();
        auto back = remove_all(prem[k].ante, {side});
        if (prem[k].succ != delta || !back || !(back->with(f) == gamma)) return false;
      }
      return true;
    }
    case RuleId::AndR:
      return f.is(Kind::And) && premise_is(prem[0], gamma, f.lhs()) &&
             premise_is(prem[1], gamma, f.rhs());
    case RuleId::OrR1:
      return f.is(Kind::Or) && premise_is(prem[0], gamma, f.lhs());
    case RuleId::OrR2:
      return f.is(Kind::Or) && premise_is(prem[0], gamma, f.rhs());
    case RuleId::ImpR: {
      if (!f.is(Kind::Imp) || prem[0].succ != f.rhs()) return false;
      auto back = remove_all(prem[0].ante, {f.lhs()});
      return back && *back == gamma;
    }
    case RuleId::AndImpL: {
      if (!f.is(Kind::Imp) || !f.lhs().is(Kind::And) || prem[0].succ != delta) return false;
      Formula curried = Formula::imp(f.lhs().lhs(), Formula::imp(f.lhs().rhs(), f.rhs()));
      auto back = remove_all(prem[0].ante, {curried});
      return back && back->with(f) == gamma;
    }
    case RuleId::OrImpL: {
      if (!f.is(Kind::Imp) || !f.lhs().is(Kind::Or) || prem[0].succ != delta) return false;
      auto back = remove_all(prem[0].ante, {Formula::imp(f.lhs().lhs(), f.rhs()),
                                            Formula::imp(f.lhs().rhs(), f.rhs())});
      return back && back->with(f) == gamma;
    }
    case RuleId::AtomImpL: {
      Formula atom = inst.principal[1];
      if (!f.is(Kind::Imp) || !atom.is_var() || f.lhs() != atom) return false;
      auto rest = remove_all(gamma, {f, atom});
      return rest && prem[0].succ == delta && prem[0].ante == rest->with(atom, f.rhs());
    }
    case RuleId::ImpImpL: {
      if (!f.is(Kind::Imp) || !f.lhs().is(Kind::Imp)) return false;
      Formula a = f.lhs(), b = f.rhs();
      Multiset rest = gamma.without(f);
      return premise_is(prem[0], rest.with(Formula::imp(a.rhs(), b)), a) &&
             premise_is(prem[1], rest.with(b), delta);
    }
    case RuleId::BoxR:
      return f.is(Kind::Box) && premise_is(prem[0], box_inverse(gamma), f.body());
    case RuleId::BoxImpL: {
      if (!f.is(Kind::Imp) || !f.lhs().is(Kind::Box)) return false;
      Multiset rest = gamma.without(f);
      return premise_is(prem[0], box_inverse(rest), f.lhs().body()) &&
             premise_is(prem[1], rest.with(f.rhs()), delta);
    }
    case RuleId::DiaImpL: {
      Formula dg = inst.principal[1];
      if (!f.is(Kind::Imp) || !f.lhs().is(Kind::Dia) || !dg.is(Kind::Dia)) return false;
      auto rest = remove_all(gamma, {f, dg});
      if (!rest) return false;
      return premise_is(prem[0], box_inverse(*rest).with(dg.body()), f.lhs().body()) &&
             premise_is(prem[1], rest->with(dg, f.rhs()), delta);
    }
    case RuleId::DiaL: {
      if (!f.is(Kind::Dia) || !delta || !delta->is(Kind::Dia)) return false;
      return premise_is(prem[0], box_inverse(gamma.without(f)).with(f.body()), delta->body());
    }
    case RuleId::DiaLW: {
      if (!f.is(Kind::Dia)) return false;
      return premise_is(prem[0], box_inverse(gamma.without(f)).with(f.body()),
                        dia_inverse_succ(delta));
    }
  }
  return false;
}

namespace {

bool check_proof_rec(const ProofTree& t, LogicId logic, std::unordered_set<const ProofTree*>& ok) {
  if (ok.contains(&t)) return true;
  RuleInstance inst{t.rule, {}, t.principal};
  for (const auto& p : t.premises) {
    if (!p) return false;
    inst.premises.push_back(p->conclusion);
  }
  if (!check_step(inst, t.conclusion, logic)) return false;
  for (const auto& p : t.premises)
    if (!check_proof_rec(*p, logic, ok)) return false;
  ok.insert(&t);
  return true;
}

}  // namespace

bool check_proof(const ProofTree& t, LogicId logic) {
  std::unordered_set<const ProofTree*> ok;
  return check_proof_rec(t, logic, ok);
}

std::vector<RuleId> rule_spine(const ProofTree& t) {
  std::vector<RuleId> out;
  for (const ProofTree* n = &t; n; n = n->premises.empty() ? nullptr : n->premises.front().get())
    out.push_back(n->rule);
  return out;
}

std::size_t proof_size(const ProofTree& t) {
  std::size_t n = 1;
  for (const auto& p : t.premises) n += proof_size(*p);
  return n;
}

nlohmann::json to_json(const ProofTree& t) {
  nlohmann::json premises = nlohmann::json::array();
  for (const auto& p : t.premises) premises.push_back(to_json(*p));
  return {{"rule", rule_name(t.rule)}, {"conclusion", to_json(t.conclusion)}, {"premises", premises}};
}

ProofPtr proof_from_json(const nlohmann::json& j) {
  auto rule = rule_from_name(j.at("rule").get<std::string>());
  if (!rule) throw std::invalid_argument("unknown rule '" + j.at("rule").get<std::string>() + "'");
  auto node = std::make_shared<ProofTree>();
  node->conclusion = sequent_from_json(j.at("conclusion"));
  node->rule = *rule;
  std::vector<Sequent> premise_seqs;
  for (const auto& p : j.at("premises")) {
    node->premises.push_back(proof_from_json(p));
    premise_seqs.push_back(node->premises.back()->conclusion);
  }
  // The schema does not carry principal formulas; recover them from the
  // matching enumerated instance, trying both logics' rule sets.
  for (LogicId logic : {LogicId::CK, LogicId::WK}) {
    if (!rule_in_logic(*rule, logic) || !respects_regime(node->conclusion, logic)) continue;
    for (auto& inst : applicable_instances(node->conclusion, logic)) {
      if (inst.rule == *rule && inst.premises == premise_seqs) {
        node->principal = std::move(inst.principal);
        return node;
      }
    }
  }
  return node;
}

namespace {

void text_rec(const ProofTree& t, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += t.conclusion.to_string();
  out += "   [";
  out += rule_name(t.rule);
  out += "]\n";
  for (const auto& p : t.premises) text_rec(*p, depth + 1, out);
}

void latex_rec(const ProofTree& t, std::string& out) {
  out += "\\infer[";
  out += rule_latex(t.rule);
  out += "]{";
  out += to_latex(t.conclusion);
  out += "}{";
  for (std::size_t i = 0; i < t.premises.size(); ++i) {
    if (i) out += " & ";
    latex_rec(*t.premises[i], out);
  }
  out += "}";
}

}  // namespace

std::string proof_to_text(const ProofTree& t) {
  std::string out;
  text_rec(t, 0, out);
  return out;
}

std::string proof_to_latex(const ProofTree& t) {
  std::string out;
  latex_rec(t, out);
  return out;
}

}  // namespace g4uip
