#include "rpog/fingroup.hpp"

#include <algorithm>
#include <bit>

namespace rpog {

ElemSet ElemSet::full(int n) {
  if (n >= 64) return {~std::uint64_t{0}};
  return {(std::uint64_t{1} << n) - 1};
}

ElemSet ElemSet::of(const std::vector<Elem>& xs) {
  ElemSet s;
  for (Elem x : xs) s.add(x);
  return s;
}

int ElemSet::size() const { return std::popcount(bits); }

std::vector<Elem> ElemSet::members() const {
  std::vector<Elem> out;
  for (std::uint64_t b = bits; b; b &= b - 1)
    out.push_back(std::countr_zero(b));
  return out;
}

Elem ElemSet::first() const {
  return bits ? std::countr_zero(bits) : -1;
}

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<Elem>> table,
                         std::vector<std::string> element_names)
    : name_(std::move(name)), table_(std::move(table)) {
  n_ = static_cast<int>(table_.size());
  if (n_ == 0)
    throw structural_error("group of order 0: a group has an identity");
  if (n_ > kMaxOrder)
    throw structural_error("group order " + std::to_string(n_) +
                           " exceeds the supported maximum " +
                           std::to_string(kMaxOrder));
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n_)
      throw structural_error("Cayley table of " + name_ + " is not square");
    for (Elem x : row)
      if (x < 0 || x >= n_)
        throw structural_error("Cayley table of " + name_ +
                               " has an out-of-range entry");
  }
  inv_.assign(n_, -1);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) {
        inv_[a] = b;
        break;
      }
  if (element_names.empty()) {
    elem_names_.reserve(n_);
    for (int i = 0; i < n_; ++i) elem_names_.push_back(std::to_string(i));
  } else {
    set_element_names(std::move(element_names));
  }
}

void FiniteGroup::set_element_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != n_)
    throw structural_error("element name list of " + name_ +
                           " has the wrong length");
  elem_names_ = std::move(names);
}

bool FiniteGroup::has_inverses() const {
  return std::ranges::all_of(inv_, [](Elem i) { return i >= 0; });
}

ElemSet FiniteGroup::closure(ElemSet seed) const {
  ElemSet cur = seed;
  cur.add(0);
  for (;;) {
    ElemSet next = cur;
    for (Elem a : cur.members())
      for (Elem b : cur.members()) next.add(op(a, b));
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<ElemSet> FiniteGroup::submonoids() const {
  std::vector<ElemSet> found = {closure(ElemSet::single(0))};
  std::vector<ElemSet> work = found;
  while (!work.empty()) {
    ElemSet h = work.back();
    work.pop_back();
    for (Elem g = 0; g < n_; ++g) {
      if (h.contains(g)) continue;
      ElemSet bigger = closure(h | ElemSet::single(g));
      if (std::ranges::find(found, bigger) == found.end()) {
        found.push_back(bigger);
        work.push_back(bigger);
      }
    }
  }
  std::ranges::sort(found, [](ElemSet a, ElemSet b) {
    return std::pair(a.size(), a.bits) < std::pair(b.size(), b.bits);
  });
  return found;
}

std::vector<ElemSet> FiniteGroup::normal_subgroups() const {
  std::vector<ElemSet> out;
  for (ElemSet s : submonoids())
    if (is_normal(s)) out.push_back(s);
  return out;
}

bool FiniteGroup::is_submonoid(ElemSet s) const {
  if (!s.contains(0)) return false;
  for (Elem a : s.members())
    for (Elem b : s.members())
      if (!s.contains(op(a, b))) return false;
  return true;
}

bool FiniteGroup::is_normal(ElemSet s) const {
  for (Elem x = 0; x < n_; ++x)
    for (Elem a : s.members())
      if (!s.contains(conj(x, a))) return false;
  return true;
}

ElemSet FiniteGroup::center() const {
  ElemSet z;
  for (Elem a = 0; a < n_; ++a) {
    bool central = true;
    for (Elem x = 0; x < n_ && central; ++x)
      central = op(a, x) == op(x, a);
    if (central) z.add(a);
  }
  return z;
}

std::vector<Elem> FiniteGroup::generating_sequence() const {
  std::vector<Elem> gens;
  ElemSet have = closure(ElemSet::single(0));
  while (have.size() < n_) {
    Elem g = (full_set() - have).first();
    gens.push_back(g);
    have = closure(have | ElemSet::single(g));
  }
  return gens;
}

std::string FiniteRpoGroup::display_name() const {
  return group.name() + " / " + cone_text();
}

std::string FiniteRpoGroup::cone_text() const {
  if (cone == group.full_set()) return "{all}";
  std::string out = "{";
  bool first = true;
  for (Elem a : cone.members()) {
    if (!first) out += ",";
    out += group.element_name(a);
    first = false;
  }
  return out + "}";
}

RpoMorphism::RpoMorphism(FiniteRpoGroup dom_, FiniteRpoGroup cod_,
                         std::vector<Elem> map_)
    : dom(std::move(dom_)), cod(std::move(cod_)), map(std::move(map_)) {
  if (static_cast<int>(map.size()) != dom.order())
    throw structural_error("morphism map length " +
                           std::to_string(map.size()) +
                           " does not match domain order " +
                           std::to_string(dom.order()));
  for (Elem x : map)
    if (x < 0 || x >= cod.order())
      throw structural_error("morphism map entry out of codomain range");
}

ElemSet RpoMorphism::image() const { return ElemSet::of(map); }

bool RpoMorphism::injective() const {
  return image().size() == dom.order();
}

RpoMorphism RpoMorphism::identity(const FiniteRpoGroup& g) {
  std::vector<Elem> m(g.order());
  for (int i = 0; i < g.order(); ++i) m[i] = i;
  return {g, g, std::move(m)};
}

RpoMorphism RpoMorphism::constant_zero(const FiniteRpoGroup& dom_,
                                       const FiniteRpoGroup& cod_) {
  return {dom_, cod_, std::vector<Elem>(dom_.order(), 0)};
}

RpoMorphism compose(const RpoMorphism& f, const RpoMorphism& g) {
  std::vector<Elem> m(g.dom.order());
  for (int i = 0; i < g.dom.order(); ++i) m[i] = f.map[g.map[i]];
  return {g.dom, f.cod, std::move(m)};
}

SubgroupPresentation subgroup_as_group(const FiniteGroup& parent,
                                       ElemSet members, std::string name) {
  std::vector<Elem> embed = members.members();
  // identity first
  if (auto it = std::ranges::find(embed, 0); it != embed.end())
    std::iter_swap(embed.begin(), it);
  else
    throw structural_error("subgroup does not contain the identity");
  std::vector<Elem> position(parent.order(), -1);
  for (int i = 0; i < static_cast<int>(embed.size()); ++i)
    position[embed[i]] = i;
  int k = static_cast<int>(embed.size());
  std::vector<std::vector<Elem>> table(k, std::vector<Elem>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Elem p = parent.op(embed[i], embed[j]);
      if (position[p] < 0)
        throw structural_error("subset is not closed under the operation");
      table[i][j] = position[p];
    }
  std::vector<std::string> names;
  names.reserve(k);
  for (Elem e : embed) names.push_back(parent.element_name(e));
  return {FiniteGroup(std::move(name), std::move(table), std::move(names)),
          std::move(embed), std::move(position)};
}

QuotientPresentation quotient_group(const FiniteGroup& parent,
                                    ElemSet normal_subgroup,
                                    std::string name) {
  std::vector<Elem> proj(parent.order(), -1);
  std::vector<Elem> reps;
  for (Elem a = 0; a < parent.order(); ++a) {
    if (proj[a] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (Elem k : normal_subgroup.members()) proj[parent.op(k, a)] = c;
    if (proj[a] < 0) proj[a] = c;
  }
  int q = static_cast<int>(reps.size());
  std::vector<std::vector<Elem>> table(q, std::vector<Elem>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[i][j] = proj[parent.op(reps[i], reps[j])];
  std::vector<std::string> names;
  names.reserve(q);
  for (Elem r : reps) names.push_back("[" + parent.element_name(r) + "]");
  return {FiniteGroup(std::move(name), std::move(table), std::move(names)),
          std::move(proj)};
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.order() * b.order();
  if (n > kMaxOrder)
    throw structural_error("direct product order exceeds the supported maximum");
  auto idx = [&](Elem x, Elem y) { return x * b.order() + y; };
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<std::string> names(n);
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < b.order(); ++y) {
      names[idx(x, y)] =
          "(" + a.element_name(x) + "," + b.element_name(y) + ")";
      for (Elem u = 0; u < a.order(); ++u)
        for (Elem v = 0; v < b.order(); ++v)
          table[idx(x, y)][idx(u, v)] = idx(a.op(x, u), b.op(y, v));
    }
  return FiniteGroup(a.name() + "x" + b.name(), std::move(table),
                     std::move(names));
}

std::optional<Elem> element_by_name(const FiniteGroup& g,
                                    const std::string& name) {
  for (Elem a = 0; a < g.order(); ++a)
    if (g.element_name(a) == name) return a;
  return std::nullopt;
}

}  // namespace rpog
