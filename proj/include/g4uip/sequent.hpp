#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "g4uip/formula.hpp"
#include "g4uip/syntax.hpp"

namespace g4uip {

// Finite multiset of formulas, stored as a vector sorted by the total formula
// order. Equal multisets therefore have identical representations.
class Multiset {
 public:
  Multiset() = default;
  Multiset(std::initializer_list<Formula> items);
  explicit Multiset(std::vector<Formula> items);

  std::span<const Formula> items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Formula& operator[](std::size_t i) const { return items_[i]; }

  std::size_t count(Formula f) const;
  bool contains(Formula f) const { return count(f) > 0; }

  void insert(Formula f);
  // Removes one copy; returns false if absent.
  bool erase_one(Formula f);

  Multiset with(Formula f) const;
  Multiset with(Formula f, Formula g) const;
  Multiset without_at(std::size_t i) const;
  Multiset without(Formula f) const;
  // One copy of each distinct member.
  Multiset support() const;

  // Indices of the first copy of each distinct member.
  template <typename F>
  void for_each_distinct(F&& f) const {
    for (std::size_t i = 0; i < items_.size(); ++i)
      if (i == 0 || !(items_[i] == items_[i - 1])) f(i, items_[i]);
  }

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.items_ == b.items_; }
  // Disjoint union.
  friend Multiset operator+(const Multiset& a, const Multiset& b);

 private:
  std::vector<Formula> items_;
};

using Succedent = std::optional<Formula>;

struct Sequent {
  Multiset ante;
  Succedent succ;

  Sequent() = default;
  Sequent(Multiset a, Succedent s) : ante(std::move(a)), succ(s) {}

  std::size_t hash() const;
  std::string to_string() const;
  // Γ ⊎ Δ, the multiset used by the termination order.
  Multiset flatten() const;

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.succ == b.succ && a.ante == b.ante;
  }
};

struct SequentHash {
  std::size_t operator()(const Sequent& s) const { return s.hash(); }
};
struct MultisetHash {
  std::size_t operator()(const Multiset& m) const { return m.hash(); }
};

// □⁻¹Γ: bodies of boxed members, multiplicities kept.
Multiset box_inverse(const Multiset& gamma);
// ◇⁻¹Δ: {δ} when Δ = {◇δ}, otherwise empty.
Multiset dia_inverse(const Succedent& delta);
// The same, as a succedent (used by ◇L′).
Succedent dia_inverse_succ(const Succedent& delta);

// Dershowitz–Manna extension of the weight order to multisets.
bool dm_less(const Multiset& a, const Multiset& b);
bool seq_less(const Sequent& a, const Sequent& b);

// `G1, G2, ... |- D`; either side may be empty.
Sequent parse_sequent(std::string_view text);
Multiset parse_formula_list(std::string_view text);

nlohmann::json to_json(const Sequent& s);
Sequent sequent_from_json(const nlohmann::json& j);
std::string to_latex(const Sequent& s);

}  // namespace g4uip
