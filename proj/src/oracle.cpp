#include "g4uip/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "g4uip/search.hpp"
#include "g4uip/syntax.hpp"
#include "g4uip/uip.hpp"

namespace g4uip {

void Report::fail(std::string what) {
  ++failure_count;
  if (failures.size() < kMaxRecorded) failures.push_back(std::move(what));
}

void Report::merge(const Report& other) {
  checked += other.checked;
  failure_count += other.failure_count;
  for (const auto& f : other.failures)
    if (failures.size() < kMaxRecorded) failures.push_back(f);
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  elapsed_seconds += other.elapsed_seconds;
}

nlohmann::json to_json(const Report& r) {
  return {{"property", r.property},
          {"passed", r.passed()},
          {"checked", r.checked},
          {"failure_count", r.failure_count},
          {"failures", r.failures},
          {"notes", r.notes},
          {"elapsed_seconds", r.elapsed_seconds}};
}

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& alphabet, int max_weight) {
  // layers[w] holds the formulas of weight exactly w.
  std::vector<std::vector<Formula>> layers(std::max(max_weight, 0) + 1);
  for (int w = 1; w <= max_weight; ++w) {
    auto& layer = layers[w];
    if (w == 1) {
      layer.push_back(Formula::bot());
      for (const auto& a : alphabet) layer.push_back(Formula::var(a));
    } else {
      for (Formula f : layers[w - 1]) {
        layer.push_back(Formula::box(f));
        layer.push_back(Formula::dia(f));
      }
      for (int l = 1; l + 1 < w; ++l)
        for (Formula a : layers[l])
          for (Formula b : layers[w - 1 - l]) {
            layer.push_back(Formula::disj(a, b));
            layer.push_back(Formula::imp(a, b));
          }
      for (int l = 1; l + 2 < w; ++l)
        for (Formula a : layers[l])
          for (Formula b : layers[w - 2 - l]) layer.push_back(Formula::conj(a, b));
    }
    std::sort(layer.begin(), layer.end(), FormulaLess{});
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }
  std::vector<Formula> out;
  for (auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::vector<Formula> enumerate_formulas(const EnumConfig& cfg) {
  return enumerate_formulas(cfg.alphabet, cfg.max_weight);
}

std::vector<Multiset> enumerate_multisets(const std::vector<Formula>& pool, int max_size) {
  std::vector<Multiset> out;
  std::vector<Formula> current;
  std::function<void(std::size_t, int)> go = [&](std::size_t from, int left) {
    out.emplace_back(current);
    if (left == 0) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      go(i, left - 1);
      current.pop_back();
    }
  };
  go(0, std::max(max_size, 0));
  return out;
}

std::string_view structural_rule_name(StructuralRule r) {
  switch (r) {
    case StructuralRule::Wk: return "wk";
    case StructuralRule::Id: return "id";
    case StructuralRule::ImpL: return "impL";
    case StructuralRule::Cntr: return "cntr";
    case StructuralRule::Cut: return "cut";
  }
  return "?";
}

std::optional<StructuralRule> structural_rule_from_name(std::string_view name) {
  for (auto r : {StructuralRule::Wk, StructuralRule::Id, StructuralRule::ImpL, StructuralRule::Cntr,
                 StructuralRule::Cut})
    if (structural_rule_name(r) == name) return r;
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

// Unbounded memo tables grow past a few GB on the larger runs.
constexpr std::size_t kCacheLimit = 3'000'000;

bool prov(const Sequent& s, LogicId logic, SearchCache& cache) {
  if (cache.size() > kCacheLimit) cache.clear();
  return provable(s, logic, cache);
}

std::vector<Succedent> succedents(const std::vector<Formula>& pool, LogicId logic) {
  std::vector<Succedent> out;
  if (logic == LogicId::WK) out.push_back(std::nullopt);
  for (Formula f : pool) out.push_back(f);
  return out;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

Report check_uniformity(Formula phi, std::string_view p, LogicId logic, const EnumConfig& cfg) {
  auto start = Clock::now();
  Report report;
  report.property = "uniformity " + std::string(logic_name(logic)) + " " + std::string(p) + " " +
                    to_text(phi);

  std::vector<std::string> pfree;
  for (const auto& a : cfg.alphabet)
    if (a != p) pfree.push_back(a);
  std::vector<std::string> with_p = pfree;
  with_p.emplace_back(p);

  auto pis = enumerate_multisets(enumerate_formulas(pfree, cfg.max_weight), cfg.max_context);
  auto deltas = succedents(enumerate_formulas(with_p, cfg.max_weight), logic);

  SearchCache cache;
  QuantCache qcache;
  Multiset gamma{phi};
  Formula e = e_quant(gamma, p, logic, qcache);

  for (const auto& delta : deltas) {
    bool pfree_delta = !delta || !occurs(p, *delta);
    Formula a = a_quant(Sequent(gamma, delta), p, logic, qcache);
    for (const auto& pi : pis) {
      Sequent base(pi.with(phi), delta);
      if (!prov(base, logic, cache)) continue;
      ++report.checked;
      if (pfree_delta && !prov(Sequent(pi.with(e), delta), logic, cache))
        report.fail("(a) " + base.to_string());
      if (!prov(Sequent(pi.with(e), a), logic, cache)) report.fail("(b) " + base.to_string());
    }
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

Report check_structural(StructuralRule rule, LogicId logic, const EnumConfig& cfg) {
  auto start = Clock::now();
  Report report;
  report.property = std::string(structural_rule_name(rule)) + " " + std::string(logic_name(logic));

  auto main_pool = enumerate_formulas(cfg.alphabet, cfg.max_weight);
  auto side_pool = enumerate_formulas(cfg.alphabet, cfg.effective_side_weight());
  auto contexts = enumerate_multisets(side_pool, cfg.max_context);
  auto deltas = succedents(side_pool, logic);

  SearchCache cache;
  auto check = [&](const std::vector<Sequent>& premises, const Sequent& conclusion) {
    for (const auto& s : premises)
      if (!prov(s, logic, cache)) return;
    ++report.checked;
    if (!prov(conclusion, logic, cache)) {
      std::string what;
      for (const auto& s : premises) what += s.to_string() + " ;; ";
      report.fail(what + "=> " + conclusion.to_string());
    }
  };

  for (Formula f : main_pool) {
    for (const auto& gamma : contexts) {
      switch (rule) {
        case StructuralRule::Id:
          check({}, Sequent(gamma.with(f), f));
          break;
        case StructuralRule::Wk:
          for (const auto& d : deltas) check({Sequent(gamma, d)}, Sequent(gamma.with(f), d));
          break;
        case StructuralRule::Cntr:
          for (const auto& d : deltas) check({Sequent(gamma.with(f, f), d)}, Sequent(gamma.with(f), d));
          break;
        case StructuralRule::Cut:
          for (const auto& d : deltas)
            check({Sequent(gamma, f), Sequent(gamma.with(f), d)}, Sequent(gamma, d));
          break;
        case StructuralRule::ImpL:
          if (!f.is(Kind::Imp)) break;
          for (const auto& d : deltas)
            check({Sequent(gamma, f.lhs()), Sequent(gamma.with(f.rhs()), d)}, Sequent(gamma.with(f), d));
          break;
      }
    }
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

Report check_hilbert_axioms(LogicId logic) {
  auto start = Clock::now();
  Report report;
  report.property = "hilbert-axioms " + std::string(logic_name(logic));

  Formula p = Formula::var("p"), q = Formula::var("q"), r = Formula::var("r");
  const std::vector<Formula> inst{p, q, r, Formula::conj(p, q), Formula::disj(p, q),
                                  Formula::imp(p, q), Formula::box(p), Formula::dia(p)};
  auto imp = Formula::imp;
  auto conj = Formula::conj;
  auto disj = Formula::disj;

  using Schema1 = std::function<Formula(Formula)>;
  using Schema2 = std::function<Formula(Formula, Formula)>;
  using Schema3 = std::function<Formula(Formula, Formula, Formula)>;

  SearchCache cache;
  auto expect = [&](const std::string& name, Formula f) {
    ++report.checked;
    if (!prov(Sequent(Multiset{}, f), logic, cache)) report.fail(name + ": " + to_text(f));
  };

  const std::vector<std::pair<std::string, Schema1>> one{
      {"A9", [&](Formula a) { return imp(Formula::bot(), a); }},
  };
  const std::vector<std::pair<std::string, Schema2>> two{
      {"A1", [&](Formula a, Formula b) { return imp(a, imp(b, a)); }},
      {"A3", [&](Formula a, Formula b) { return imp(a, disj(a, b)); }},
      {"A4", [&](Formula a, Formula b) { return imp(b, disj(a, b)); }},
      {"A6", [&](Formula a, Formula b) { return imp(conj(a, b), a); }},
      {"A7", [&](Formula a, Formula b) { return imp(conj(a, b), b); }},
      {"Kbox", [&](Formula a, Formula b) {
         return imp(Formula::box(imp(a, b)), imp(Formula::box(a), Formula::box(b)));
       }},
      {"Kdia", [&](Formula a, Formula b) {
         return imp(Formula::box(imp(a, b)), imp(Formula::dia(a), Formula::dia(b)));
       }},
  };
  const std::vector<std::pair<std::string, Schema3>> three{
      {"A2", [&](Formula a, Formula b, Formula c) {
         return imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c)));
       }},
      {"A5", [&](Formula a, Formula b, Formula c) {
         return imp(imp(a, c), imp(imp(b, c), imp(disj(a, b), c)));
       }},
      {"A8", [&](Formula a, Formula b, Formula c) {
         return imp(imp(a, b), imp(imp(a, c), imp(a, conj(b, c))));
       }},
  };

  for (const auto& [name, s] : one)
    for (Formula a : inst) expect(name, s(a));
  for (const auto& [name, s] : two)
    for (Formula a : inst)
      for (Formula b : inst) expect(name, s(a, b));
  for (const auto& [name, s] : three)
    for (Formula a : inst)
      for (Formula b : inst)
        for (Formula c : inst) expect(name, s(a, b, c));

  Formula n = Formula::neg(Formula::dia(Formula::bot()));
  bool n_provable = prov(Sequent(Multiset{}, n), logic, cache);
  ++report.checked;
  if (logic == LogicId::WK) {
    if (!n_provable) report.fail("N: " + to_text(n));
    report.notes.push_back("N provable");
  } else {
    if (n_provable) report.fail("N provable under CK: " + to_text(n));
    report.notes.push_back("N unprovable");
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace g4uip
