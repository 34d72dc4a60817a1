#include "g4uip/sequent.hpp"

#include <algorithm>

namespace g4uip {

Multiset::Multiset(std::initializer_list<Formula> items) : items_(items) {
  std::sort(items_.begin(), items_.end(), FormulaLess{});
}

Multiset::Multiset(std::vector<Formula> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end(), FormulaLess{});
}

std::size_t Multiset::count(Formula f) const {
  auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), f, FormulaLess{});
  return static_cast<std::size_t>(hi - lo);
}

void Multiset::insert(Formula f) {
  items_.insert(std::upper_bound(items_.begin(), items_.end(), f, FormulaLess{}), f);
}

bool Multiset::erase_one(Formula f) {
  auto it = std::lower_bound(items_.begin(), items_.end(), f, FormulaLess{});
  if (it == items_.end() || !(*it == f)) return false;
  items_.erase(it);
  return true;
}

Multiset Multiset::with(Formula f) const {
  Multiset out;
  out.items_.reserve(items_.size() + 1);
  out.items_ = items_;
  out.insert(f);
  return out;
}

Multiset Multiset::with(Formula f, Formula g) const {
  Multiset out;
  out.items_.reserve(items_.size() + 2);
  out.items_ = items_;
  out.insert(f);
  out.insert(g);
  return out;
}

Multiset Multiset::without_at(std::size_t i) const {
  Multiset out;
  out.items_.reserve(items_.size() - 1);
  out.items_.insert(out.items_.end(), items_.begin(), items_.begin() + static_cast<long>(i));
  out.items_.insert(out.items_.end(), items_.begin() + static_cast<long>(i) + 1, items_.end());
  return out;
}

Multiset Multiset::support() const {
  Multiset out;
  out.items_ = items_;
  out.items_.erase(std::unique(out.items_.begin(), out.items_.end()), out.items_.end());
  return out;
}

Multiset Multiset::without(Formula f) const {
  Multiset out = *this;
  out.erase_one(f);
  return out;
}

std::size_t Multiset::hash() const {
  std::size_t h = items_.size();
  for (Formula f : items_) h = h * 0x100000001b3ULL ^ f.hash();
  return h;
}

std::string Multiset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ", ";
    out += to_text(items_[i]);
  }
  return out;
}

Multiset operator+(const Multiset& a, const Multiset& b) {
  Multiset out;
  out.items_.reserve(a.size() + b.size());
  std::merge(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
             std::back_inserter(out.items_), FormulaLess{});
  return out;
}

std::size_t Sequent::hash() const {
  return ante.hash() * 31 + (succ ? succ->hash() : 0x51ed270b27a2c7ULL);
}

std::string Sequent::to_string() const {
  std::string out = ante.to_string();
  out += ante.empty() ? "|-" : " |-";
  if (succ) out += " " + to_text(*succ);
  return out;
}

Multiset Sequent::flatten() const { return succ ? ante.with(*succ) : ante; }

Multiset box_inverse(const Multiset& gamma) {
  std::vector<Formula> bodies;
  for (Formula f : gamma)
    if (f.is(Kind::Box)) bodies.push_back(f.body());
  return Multiset(std::move(bodies));
}

Multiset dia_inverse(const Succedent& delta) {
  if (delta && delta->is(Kind::Dia)) return Multiset{delta->body()};
  return {};
}

Succedent dia_inverse_succ(const Succedent& delta) {
  if (delta && delta->is(Kind::Dia)) return delta->body();
  return std::nullopt;
}

bool dm_less(const Multiset& a, const Multiset& b) {
  // a ≺ b iff a ≠ b and every surplus element of a is dominated (strictly
  // smaller weight) by some surplus element of b.
  std::vector<std::uint64_t> a_surplus;
  std::uint64_t b_max = 0;
  bool b_has_surplus = false;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && FormulaLess{}(*ia, *ib))) {
      a_surplus.push_back(ia->weight());
      ++ia;
    } else if (ia == a.end() || FormulaLess{}(*ib, *ia)) {
      b_has_surplus = true;
      b_max = std::max(b_max, ib->weight());
      ++ib;
    } else {
      ++ia;
      ++ib;
    }
  }
  if (!b_has_surplus) return false;
  return std::all_of(a_surplus.begin(), a_surplus.end(), [&](std::uint64_t w) { return w < b_max; });
}

bool seq_less(const Sequent& a, const Sequent& b) { return dm_less(a.flatten(), b.flatten()); }

nlohmann::json to_json(const Sequent& s) {
  nlohmann::json ante = nlohmann::json::array();
  for (Formula f : s.ante) ante.push_back(to_json(f));
  return {{"ante", ante}, {"succ", s.succ ? to_json(*s.succ) : nlohmann::json(nullptr)}};
}

Sequent sequent_from_json(const nlohmann::json& j) {
  std::vector<Formula> ante;
  for (const auto& f : j.at("ante")) ante.push_back(formula_from_json(f));
  Succedent succ;
  if (!j.at("succ").is_null()) succ = formula_from_json(j.at("succ"));
  return Sequent(Multiset(std::move(ante)), succ);
}

std::string to_latex(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.ante.size(); ++i) {
    if (i) out += ", ";
    out += to_latex(s.ante[i]);
  }
  out += out.empty() ? "\\Rightarrow" : " \\Rightarrow";
  if (s.succ) out += " " + to_latex(*s.succ);
  return out;
}

}  // namespace g4uip
