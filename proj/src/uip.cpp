#include "g4uip/uip.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace g4uip {

QuantCache::Tables& QuantCache::tables(LogicId logic, std::string_view var) {
  return tables_[{logic, std::string(var)}];
}

std::size_t QuantCache::size() const {
  std::size_t n = 0;
  for (const auto& [key, t] : tables_) n += t.e.size() + t.a.size();
  return n;
}

Formula big_and(const std::vector<Formula>& sorted) {
  if (sorted.empty()) return Formula::top();
  Formula acc = sorted.back();
  for (auto it = sorted.rbegin() + 1; it != sorted.rend(); ++it) acc = Formula::conj(*it, acc);
  return acc;
}

Formula big_or(const std::vector<Formula>& sorted) {
  if (sorted.empty()) return Formula::bot();
  Formula acc = sorted.back();
  for (auto it = sorted.rbegin() + 1; it != sorted.rend(); ++it) acc = Formula::disj(*it, acc);
  return acc;
}

namespace {

using Entry = QuantCache::Entry;

Entry make_entry(std::vector<Formula> items, bool conjunctive) {
  std::sort(items.begin(), items.end(), FormulaLess{});
  items.erase(std::unique(items.begin(), items.end()), items.end());
  Formula folded = conjunctive ? big_and(items) : big_or(items);
  return Entry{std::move(items), folded};
}

// One run of the mutually recursive 𝓔/𝒜 construction for a fixed variable
// and logic. Row labels follow the usual numbering of the construction table.
class Construction {
 public:
  Construction(std::string_view p, LogicId logic, QuantCache& cache)
      : p_(p), logic_(logic), check_(cache.check_descent), tables_(cache.tables(logic, p)) {}

  const Entry& e_entry(const Multiset& gamma) {
    if (auto it = tables_.e.find(gamma); it != tables_.e.end()) return it->second;
    Entry entry = make_entry(e_rows(gamma), true);
    return tables_.e.emplace(gamma, std::move(entry)).first->second;
  }

  const Entry& a_entry(const Sequent& s) {
    if (auto it = tables_.a.find(s); it != tables_.a.end()) return it->second;
    Entry entry = make_entry(a_rows(s), false);
    return tables_.a.emplace(s, std::move(entry)).first->second;
  }

 private:
  bool is_p(Formula f) const { return f.is_var(p_); }

  Formula E(const Multiset& gamma, const Multiset& parent) {
    if (check_ && !dm_less(gamma, parent))
      throw std::logic_error("non-descending E call on " + gamma.to_string());
    return e_entry(gamma).folded;
  }

  Formula A(const Sequent& s, const Multiset& parent) {
    if (check_ && !dm_less(s.flatten(), parent))
      throw std::logic_error("non-descending A call on " + s.to_string());
    return a_entry(s).folded;
  }

  // Ep(Σ) → Ap(Σ ⇒ δ), the recurring guarded block of the modal rows.
  Formula guard(const Multiset& sigma, Formula delta, const Multiset& parent) {
    return Formula::imp(E(sigma, parent), A(Sequent(sigma, delta), parent));
  }

  std::vector<Formula> e_rows(const Multiset& gamma) {
    std::vector<Formula> out;
    const Multiset& key = gamma;
    gamma.for_each_distinct([&](std::size_t i, Formula f) {
      Multiset rest = gamma.without_at(i);
      switch (f.kind()) {
        case Kind::Bot:  // E0
          out.push_back(Formula::bot());
          break;
        case Kind::Var:  // E1′, E1″
          out.push_back(is_p(f) ? Formula::top() : f);
          break;
        case Kind::And:  // E2
          out.push_back(E(rest.with(f.lhs(), f.rhs()), key));
          break;
        case Kind::Or:  // E3
          out.push_back(Formula::disj(E(rest.with(f.lhs()), key), E(rest.with(f.rhs()), key)));
          break;
        case Kind::Box:
          break;
        case Kind::Dia:  // E11
          out.push_back(Formula::dia(E(box_inverse(rest).with(f.body()), key)));
          break;
        case Kind::Imp: {
          Formula a = f.lhs(), b = f.rhs();
          switch (a.kind()) {
            case Kind::Bot:
              break;
            case Kind::Var:
              if (rest.contains(a))  // E5′
                out.push_back(E(rest.with(b), key));
              else if (is_p(a))  // E4″
                out.push_back(Formula::top());
              else  // E4′
                out.push_back(Formula::imp(a, E(rest.with(b), key)));
              break;
            case Kind::And:  // E6
              out.push_back(E(rest.with(Formula::imp(a.lhs(), Formula::imp(a.rhs(), b))), key));
              break;
            case Kind::Or:  // E7
              out.push_back(E(rest.with(Formula::imp(a.lhs(), b), Formula::imp(a.rhs(), b)), key));
              break;
            case Kind::Imp: {  // E8′
              Multiset ctx = rest.with(Formula::imp(a.rhs(), b), a.lhs());
              out.push_back(Formula::imp(guard(ctx, a.rhs(), key), E(rest.with(b), key)));
              break;
            }
            case Kind::Box:  // E10
              out.push_back(Formula::imp(Formula::box(guard(box_inverse(rest), a.body(), key)),
                                         E(rest.with(b), key)));
              break;
            case Kind::Dia: {
              Multiset boxed = box_inverse(rest);
              Formula cont = E(rest.with(b), key);
              // E12, one per ◇δ₃ of the context
              rest.for_each_distinct([&](std::size_t, Formula g) {
                if (g.is(Kind::Dia))
                  out.push_back(
                      Formula::imp(Formula::box(guard(boxed.with(g.body()), a.body(), key)), cont));
              });
              // E13
              out.push_back(Formula::imp(Formula::dia(guard(boxed, a.body(), key)), cont));
              break;
            }
          }
          break;
        }
      }
    });
    if (!gamma.empty())  // E9
      out.push_back(Formula::box(E(box_inverse(gamma), key)));
    return out;
  }

  std::vector<Formula> a_rows(const Sequent& s) {
    std::vector<Formula> out;
    const Multiset key = s.flatten();
    const Multiset& gamma = s.ante;
    const Succedent& delta = s.succ;

    gamma.for_each_distinct([&](std::size_t i, Formula f) {
      Multiset rest = gamma.without_at(i);
      switch (f.kind()) {
        case Kind::Bot:
        case Kind::Box:
          break;
        case Kind::Var:  // A1′, A1″
          if (!is_p(f) || delta != f) out.push_back(Formula::bot());
          break;
        case Kind::And:  // A2
          out.push_back(A(Sequent(rest.with(f.lhs(), f.rhs()), delta), key));
          break;
        case Kind::Or: {  // A3
          Multiset l = rest.with(f.lhs()), r = rest.with(f.rhs());
          out.push_back(Formula::conj(Formula::imp(E(l, key), A(Sequent(l, delta), key)),
                                      Formula::imp(E(r, key), A(Sequent(r, delta), key))));
          break;
        }
        case Kind::Dia: {
          Multiset ctx = box_inverse(rest).with(f.body());
          if (logic_ == LogicId::CK) {
            if (delta && delta->is(Kind::Dia))  // A16
              out.push_back(Formula::box(guard(ctx, delta->body(), key)));
          } else {  // A′16
            out.push_back(Formula::box(Formula::imp(
                E(ctx, key), A(Sequent(ctx, dia_inverse_succ(delta)), key))));
          }
          break;
        }
        case Kind::Imp: {
          Formula a = f.lhs(), b = f.rhs();
          switch (a.kind()) {
            case Kind::Bot:
              break;
            case Kind::Var:
              if (rest.contains(a))  // A5′
                out.push_back(A(Sequent(rest.with(b), delta), key));
              else if (is_p(a))  // A4″
                out.push_back(Formula::bot());
              else  // A4′
                out.push_back(Formula::conj(a, A(Sequent(rest.with(b), delta), key)));
              break;
            case Kind::And:  // A6
              out.push_back(A(
                  Sequent(rest.with(Formula::imp(a.lhs(), Formula::imp(a.rhs(), b))), delta), key));
              break;
            case Kind::Or:  // A7
              out.push_back(A(Sequent(rest.with(Formula::imp(a.lhs(), b), Formula::imp(a.rhs(), b)),
                                      delta),
                              key));
              break;
            case Kind::Imp: {  // A8′
              Multiset ctx = rest.with(Formula::imp(a.rhs(), b), a.lhs());
              out.push_back(
                  Formula::conj(guard(ctx, a.rhs(), key), A(Sequent(rest.with(b), delta), key)));
              break;
            }
            case Kind::Box:  // A15
              out.push_back(Formula::conj(Formula::box(guard(box_inverse(rest), a.body(), key)),
                                          A(Sequent(rest.with(b), delta), key)));
              break;
            case Kind::Dia: {
              Multiset boxed = box_inverse(rest);
              Formula cont = A(Sequent(rest.with(b), delta), key);
              // A17, one per ◇δ₃ of the context
              rest.for_each_distinct([&](std::size_t, Formula g) {
                if (g.is(Kind::Dia))
                  out.push_back(
                      Formula::conj(Formula::box(guard(boxed.with(g.body()), a.body(), key)), cont));
              });
              // A19
              out.push_back(Formula::conj(Formula::dia(guard(boxed, a.body(), key)), cont));
              break;
            }
          }
          break;
        }
      }
    });

    if (delta) {
      Formula d = *delta;
      switch (d.kind()) {
        case Kind::Var:
          if (!is_p(d))  // A9
            out.push_back(d);
          else if (gamma.contains(d))  // A10
            out.push_back(Formula::top());
          break;
        case Kind::And:  // A11
          out.push_back(Formula::conj(A(Sequent(gamma, d.lhs()), key), A(Sequent(gamma, d.rhs()), key)));
          break;
        case Kind::Or:  // A12
          out.push_back(Formula::disj(A(Sequent(gamma, d.lhs()), key), A(Sequent(gamma, d.rhs()), key)));
          break;
        case Kind::Imp: {  // A13
          Multiset ctx = gamma.with(d.lhs());
          out.push_back(Formula::imp(E(ctx, key), A(Sequent(ctx, d.rhs()), key)));
          break;
        }
        case Kind::Box:  // A14
          out.push_back(Formula::box(guard(box_inverse(gamma), d.body(), key)));
          break;
        case Kind::Dia:  // A18
          out.push_back(Formula::dia(guard(box_inverse(gamma), d.body(), key)));
          break;
        case Kind::Bot:
          break;
      }
    }
    return out;
  }

  std::string_view p_;
  LogicId logic_;
  bool check_;
  QuantCache::Tables& tables_;
};

}  // namespace

const std::vector<Formula>& e_set(const Multiset& gamma, std::string_view p, LogicId logic,
                                  QuantCache& cache) {
  return Construction(p, logic, cache).e_entry(gamma).set;
}

const std::vector<Formula>& a_set(const Sequent& s, std::string_view p, LogicId logic,
                                  QuantCache& cache) {
  if (!respects_regime(s, logic))
    throw std::invalid_argument("CK sequents need exactly one succedent formula");
  return Construction(p, logic, cache).a_entry(s).set;
}

Formula e_quant(const Multiset& gamma, std::string_view p, LogicId logic, QuantCache& cache) {
  return Construction(p, logic, cache).e_entry(gamma).folded;
}

Formula a_quant(const Sequent& s, std::string_view p, LogicId logic, QuantCache& cache) {
  if (!respects_regime(s, logic))
    throw std::invalid_argument("CK sequents need exactly one succedent formula");
  return Construction(p, logic, cache).a_entry(s).folded;
}

Formula interpolate_exists(Formula phi, std::string_view p, LogicId logic, QuantCache& cache) {
  return e_quant(Multiset{phi}, p, logic, cache);
}

Formula interpolate_exists(Formula phi, std::string_view p, LogicId logic) {
  QuantCache cache;
  return interpolate_exists(phi, p, logic, cache);
}

Formula interpolate_forall(Formula phi, std::string_view p, LogicId logic, QuantCache& cache) {
  return a_quant(Sequent(Multiset{}, phi), p, logic, cache);
}

Formula interpolate_forall(Formula phi, std::string_view p, LogicId logic) {
  QuantCache cache;
  return interpolate_forall(phi, p, logic, cache);
}

std::string fresh_variable(Formula phi, std::string_view avoid) {
  auto used = free_vars(phi);
  auto ok = [&](const std::string& v) { return v != avoid && !used.contains(v); };
  for (const char* v : {"q", "r", "s", "t", "u", "v", "w"})
    if (ok(v)) return v;
  for (int i = 1;; ++i)
    if (std::string v = "q" + std::to_string(i); ok(v)) return v;
}

Formula exists_via_forall(Formula phi, std::string_view p, LogicId logic, QuantCache& cache) {
  std::string q = fresh_variable(phi, p);
  Formula qv = Formula::var(q);
  Formula inner = interpolate_forall(Formula::imp(phi, qv), p, logic, cache);
  return interpolate_forall(Formula::imp(inner, qv), q, logic, cache);
}

Formula exists_via_forall(Formula phi, std::string_view p, LogicId logic) {
  QuantCache cache;
  return exists_via_forall(phi, p, logic, cache);
}

namespace {

Formula simplify_rec(Formula f, std::unordered_map<Formula, Formula>& memo) {
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  Formula out = f;
  if (f.is_top()) {
    out = f;
  } else {
    switch (f.kind()) {
      case Kind::Bot:
      case Kind::Var:
        break;
      case Kind::Box:
        out = Formula::box(simplify_rec(f.body(), memo));
        break;
      case Kind::Dia:
        out = Formula::dia(simplify_rec(f.body(), memo));
        break;
      case Kind::And: {
        Formula l = simplify_rec(f.lhs(), memo), r = simplify_rec(f.rhs(), memo);
        if (l.is(Kind::Bot) || r.is(Kind::Bot)) out = Formula::bot();
        else if (r.is_top()) out = l;
        else if (l.is_top()) out = r;
        else out = Formula::conj(l, r);
        break;
      }
      case Kind::Or: {
        Formula l = simplify_rec(f.lhs(), memo), r = simplify_rec(f.rhs(), memo);
        if (l.is_top() || r.is_top()) out = Formula::top();
        else if (r.is(Kind::Bot)) out = l;
        else if (l.is(Kind::Bot)) out = r;
        else out = Formula::disj(l, r);
        break;
      }
      case Kind::Imp: {
        Formula l = simplify_rec(f.lhs(), memo), r = simplify_rec(f.rhs(), memo);
        if (r.is_top()) out = Formula::top();
        else if (l.is_top()) out = r;
        else out = Formula::imp(l, r);
        break;
      }
    }
  }
  memo.emplace(f, out);
  return out;
}

}  // namespace

Formula simplify(Formula phi) {
  std::unordered_map<Formula, Formula> memo;
  return simplify_rec(phi, memo);
}

}  // namespace g4uip
