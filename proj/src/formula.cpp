#include "g4uip/formula.hpp"

#include <deque>
#include <limits>
#include <mutex>
#include <unordered_set>
#include <vector>

namespace g4uip {

namespace {

using detail::Node;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

struct NodeKeyHash {
  std::size_t operator()(const Node* n) const { return n->hash; }
};

struct NodeKeyEq {
  bool operator()(const Node* a, const Node* b) const {
    return a->kind == b->kind && a->lhs == b->lhs && a->rhs == b->rhs && a->name == b->name;
  }
};

class Interner {
 public:
  static Interner& instance() {
    static Interner* table = new Interner();
    return *table;
  }

  const Node* make(Kind kind, const Node* lhs, const Node* rhs, const std::string* name) {
    Node probe{kind, 0, 0, 0, lhs, rhs, name};
    probe.hash = structural_hash(probe);
    std::lock_guard lock(mutex_);
    if (auto it = nodes_.find(&probe); it != nodes_.end()) return *it;
    probe.id = static_cast<std::uint32_t>(storage_.size());
    probe.weight = weight_of(probe);
    storage_.push_back(probe);
    const Node* stored = &storage_.back();
    nodes_.insert(stored);
    return stored;
  }

  const std::string* name(std::string_view s) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = names_.emplace(s);
    return &*it;
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return storage_.size();
  }

 private:
  static std::size_t structural_hash(const Node& n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ULL;
    if (n.name) h = mix(h, std::hash<std::string>{}(*n.name));
    if (n.lhs) h = mix(h, n.lhs->hash);
    if (n.rhs) h = mix(h, n.rhs->hash);
    return h;
  }

  static std::uint64_t weight_of(const Node& n) {
    switch (n.kind) {
      case Kind::Bot:
      case Kind::Var:
        return 1;
      case Kind::Or:
      case Kind::Imp:
        return sat_add(sat_add(n.lhs->weight, n.rhs->weight), 1);
      case Kind::And:
        return sat_add(sat_add(n.lhs->weight, n.rhs->weight), 2);
      case Kind::Box:
      case Kind::Dia:
        return sat_add(n.lhs->weight, 1);
    }
    return 1;
  }

  std::mutex mutex_;
  std::deque<Node> storage_;
  std::unordered_set<const Node*, NodeKeyHash, NodeKeyEq> nodes_;
  std::unordered_set<std::string> names_;
};

const Node* bot_node() {
  static const Node* n = Interner::instance().make(Kind::Bot, nullptr, nullptr, nullptr);
  return n;
}

std::strong_ordering compare_nodes(const Node* a, const Node* b) {
  while (a != b) {
    if (auto c = a->weight <=> b->weight; c != 0) return c;
    if (auto c = a->kind <=> b->kind; c != 0) return c;
    switch (a->kind) {
      case Kind::Bot:
        return std::strong_ordering::equal;
      case Kind::Var: {
        int c = a->name->compare(*b->name);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
      }
      case Kind::Box:
      case Kind::Dia:
        a = a->lhs;
        b = b->lhs;
        break;
      default:
        if (auto c = compare_nodes(a->lhs, b->lhs); c != 0) return c;
        a = a->rhs;
        b = b->rhs;
        break;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace

Formula::Formula() : node_(bot_node()) {}

Formula Formula::bot() { return Formula(bot_node()); }

Formula Formula::top() { return imp(bot(), bot()); }

Formula Formula::var(std::string_view name) {
  auto& in = Interner::instance();
  return Formula(in.make(Kind::Var, nullptr, nullptr, in.name(name)));
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula(Interner::instance().make(Kind::And, a.node_, b.node_, nullptr));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(Interner::instance().make(Kind::Or, a.node_, b.node_, nullptr));
}

Formula Formula::imp(Formula a, Formula b) {
  return Formula(Interner::instance().make(Kind::Imp, a.node_, b.node_, nullptr));
}

Formula Formula::box(Formula a) {
  return Formula(Interner::instance().make(Kind::Box, a.node_, nullptr, nullptr));
}

Formula Formula::dia(Formula a) {
  return Formula(Interner::instance().make(Kind::Dia, a.node_, nullptr, nullptr));
}

bool Formula::is_top() const {
  return node_->kind == Kind::Imp && node_->lhs->kind == Kind::Bot &&
         node_->rhs->kind == Kind::Bot;
}

std::strong_ordering operator<=>(Formula a, Formula b) { return compare_nodes(a.node_, b.node_); }

namespace {

template <typename Visit>
void walk_dag(Formula phi, Visit&& visit) {
  std::unordered_set<std::uint32_t> seen;
  std::vector<Formula> stack{phi};
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (!seen.insert(f.id()).second) continue;
    visit(f);
    switch (f.kind()) {
      case Kind::Bot:
      case Kind::Var:
        break;
      case Kind::Box:
      case Kind::Dia:
        stack.push_back(f.body());
        break;
      default:
        stack.push_back(f.lhs());
        stack.push_back(f.rhs());
    }
  }
}

}  // namespace

std::set<std::string> free_vars(Formula phi) {
  std::set<std::string> out;
  walk_dag(phi, [&](Formula f) {
    if (f.is_var()) out.insert(f.name());
  });
  return out;
}

bool occurs(std::string_view var, Formula phi) {
  bool found = false;
  walk_dag(phi, [&](Formula f) {
    if (f.is_var(var)) found = true;
  });
  return found;
}

std::size_t dag_size(Formula phi) {
  std::size_t n = 0;
  walk_dag(phi, [&](Formula) { ++n; });
  return n;
}

std::size_t interned_node_count() { return Interner::instance().size(); }

}  // namespace g4uip
