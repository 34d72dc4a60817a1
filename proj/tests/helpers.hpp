#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "g4uip/formula.hpp"
#include "g4uip/sequent.hpp"
#include "g4uip/syntax.hpp"

namespace testing {

using namespace g4uip;

inline Formula F(const char* text) { return parse_formula(text); }
inline Sequent S(const char* text) { return parse_sequent(text); }

// Weight recomputed from the tree shape, independently of the cached value.
inline std::uint64_t tree_weight(Formula f) {
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Var:
      return 1;
    case Kind::And:
      return tree_weight(f.lhs()) + tree_weight(f.rhs()) + 2;
    case Kind::Or:
    case Kind::Imp:
      return tree_weight(f.lhs()) + tree_weight(f.rhs()) + 1;
    case Kind::Box:
    case Kind::Dia:
      return tree_weight(f.body()) + 1;
  }
  return 0;
}

// Random formula with roughly `budget` connectives over the given atoms.
inline Formula random_formula(std::mt19937& rng, int budget, const std::vector<std::string>& atoms) {
  std::uniform_int_distribution<int> pick(0, 99);
  if (budget <= 0) {
    std::uniform_int_distribution<std::size_t> a(0, atoms.size());
    std::size_t i = a(rng);
    return i == atoms.size() ? Formula::bot() : Formula::var(atoms[i]);
  }
  int k = pick(rng) % 5;
  if (k >= 3) {
    Formula b = random_formula(rng, budget - 1, atoms);
    return k == 3 ? Formula::box(b) : Formula::dia(b);
  }
  std::uniform_int_distribution<int> split(0, budget - 1);
  int l = split(rng);
  Formula a = random_formula(rng, l, atoms);
  Formula b = random_formula(rng, budget - 1 - l, atoms);
  if (k == 0) return Formula::conj(a, b);
  if (k == 1) return Formula::disj(a, b);
  return Formula::imp(a, b);
}

inline Multiset random_multiset(std::mt19937& rng, int max_size, int budget,
                                const std::vector<std::string>& atoms) {
  std::uniform_int_distribution<int> n(0, max_size);
  std::uniform_int_distribution<int> b(0, budget);
  std::vector<Formula> items;
  int count = n(rng);
  for (int i = 0; i < count; ++i) items.push_back(random_formula(rng, b(rng), atoms));
  return Multiset(items);
}

}  // namespace testing
