#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>

namespace g4uip {

enum class Kind : std::uint8_t { Bot, Var, And, Or, Imp, Box, Dia };

namespace detail {
struct Node {
  Kind kind;
  std::uint32_t id;
  std::uint64_t weight;
  std::size_t hash;
  const Node* lhs;
  const Node* rhs;
  const std::string* name;
};
}  // namespace detail

// Hash-consed formula handle. Structurally equal formulas share one node,
// so equality and hashing are pointer operations. Nodes live for the whole
// process and may be shared freely across threads.
class Formula {
 public:
  Formula();  // ⊥

  static Formula bot();
  static Formula top();  // ⊥ → ⊥
  static Formula var(std::string_view name);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula neg(Formula a) { return imp(a, bot()); }
  static Formula box(Formula a);
  static Formula dia(Formula a);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  bool is_var() const { return node_->kind == Kind::Var; }
  bool is_var(std::string_view name) const {
    return node_->kind == Kind::Var && *node_->name == name;
  }
  bool is_top() const;
  bool is_binary() const {
    return node_->kind == Kind::And || node_->kind == Kind::Or || node_->kind == Kind::Imp;
  }

  // Children: lhs/rhs for binary connectives, body for □ and ◇.
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }
  Formula body() const { return Formula(node_->lhs); }
  const std::string& name() const { return *node_->name; }

  // Saturates at UINT64_MAX for very large shared DAGs.
  std::uint64_t weight() const { return node_->weight; }
  std::uint32_t id() const { return node_->id; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(Formula a, Formula b) { return a.node_ == b.node_; }

  // Total order: weight, constructor rank, variable name, children left to right.
  friend std::strong_ordering operator<=>(Formula a, Formula b);

 private:
  explicit Formula(const detail::Node* n) : node_(n) {}
  const detail::Node* node_;
};

struct FormulaLess {
  bool operator()(Formula a, Formula b) const { return (a <=> b) < 0; }
};

std::set<std::string> free_vars(Formula phi);
bool occurs(std::string_view var, Formula phi);

// Number of distinct nodes reachable from phi (DAG size).
std::size_t dag_size(Formula phi);

// Number of interned nodes in the process-wide table.
std::size_t interned_node_count();

}  // namespace g4uip

template <>
struct std::hash<g4uip::Formula> {
  std::size_t operator()(g4uip::Formula f) const noexcept { return f.hash(); }
};
