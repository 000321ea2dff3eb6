#include "rpog/subobjects.hpp"

#include <algorithm>

#include "rpog/indexed.hpp"

namespace rpog {

namespace {

Binding bind(const FiniteGroup& g, std::string name, Elem a) {
  return {std::move(name), g.element_name(a), a};
}

ElemSet product_set(const FiniteGroup& g, ElemSet n, ElemSet m) {
  ElemSet out;
  for (Elem a : n.members())
    for (Elem b : m.members()) out.add(g.op(a, b));
  return out;
}

}  // namespace

int NormalLattice::index_of(ElemSet subgroup) const {
  for (int i = 0; i < static_cast<int>(elements.size()); ++i)
    if (elements[i].subgroup == subgroup) return i;
  return -1;
}

NormalLattice normal_lattice(const FiniteRpoGroup& g) {
  if (!validate(g))
    throw precondition_error("normal_lattice: invalid input");
  NormalLattice l;
  l.carrier = g;
  for (ElemSet n : g.group.normal_subgroups())
    l.elements.push_back({n, n & g.cone});
  const int k = static_cast<int>(l.elements.size());
  l.join.assign(k, std::vector<int>(k, -1));
  l.meet.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      ElemSet nm = product_set(g.group, l.elements[i].subgroup,
                               l.elements[j].subgroup);
      l.join[i][j] = l.index_of(nm);
      l.meet[i][j] =
          l.index_of(l.elements[i].subgroup & l.elements[j].subgroup);
      if (l.join[i][j] < 0 || l.meet[i][j] < 0)
        throw structural_error("normal subgroups not closed under join/meet");
    }
  return l;
}

Verdict check_modular(const FiniteLattice& l) {
  for (int a = 0; a < l.n; ++a)
    for (int b = 0; b < l.n; ++b)
      for (int c = 0; c < l.n; ++c) {
        int lhs = l.join[l.meet[a][b]][l.meet[c][b]];
        int rhs = l.meet[l.join[l.meet[a][b]][c]][b];
        if (lhs != rhs)
          return Verdict::no("modularity",
                             {{"a", std::to_string(a), a},
                              {"b", std::to_string(b), b},
                              {"c", std::to_string(c), c}});
      }
  return Verdict::yes("modularity");
}

Verdict check_lattice_iso(const FiniteRpoGroup& g) {
  NormalLattice l = normal_lattice(g);
  std::vector<ElemSet> plain = g.group.normal_subgroups();
  if (plain.size() != l.elements.size())
    return Verdict::no("lattice-bijection", {},
                       "element counts differ");
  for (size_t i = 0; i < l.elements.size(); ++i) {
    if (l.elements[i].subgroup != plain[i])
      return Verdict::no("lattice-bijection", {}, "subgroup lists differ");
    if (l.elements[i].cone != (plain[i] & g.cone))
      return Verdict::no("lattice-bijection", {},
                         "cone is not the forced intersection");
  }
  const int k = static_cast<int>(l.elements.size());
  auto plain_index = [&](ElemSet s) {
    return static_cast<int>(std::ranges::find(plain, s) - plain.begin());
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      ElemSet nm = product_set(g.group, plain[i], plain[j]);
      if (l.join[i][j] != plain_index(nm))
        return Verdict::no("join-preservation", {},
                           "join differs at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
      if (l.meet[i][j] != plain_index(plain[i] & plain[j]))
        return Verdict::no("meet-preservation", {},
                           "meet differs at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
    }
  return Verdict::yes("lattice isomorphism");
}

EffEqRelation EffEqRelation::from_normal(const FiniteRpoGroup& carrier,
                                         ElemSet normal) {
  if (!carrier.group.is_submonoid(normal) || !carrier.group.is_normal(normal))
    throw structural_error("relation classes are not cosets of a normal subgroup");
  EffEqRelation r;
  r.carrier = carrier;
  r.normal_subgroup = normal;
  r.class_of.assign(carrier.order(), -1);
  int next = 0;
  for (Elem a = 0; a < carrier.order(); ++a) {
    if (r.class_of[a] >= 0) continue;
    for (Elem k : normal.members()) r.class_of[carrier.group.op(k, a)] = next;
    ++next;
  }
  for (Elem p : carrier.cone.members())
    for (Elem q : carrier.cone.members())
      if (r.class_of[p] == r.class_of[q]) r.cone_pairs.insert({p, q});
  return r;
}

EffEqRelation EffEqRelation::from_partition(
    const FiniteRpoGroup& carrier,
    const std::vector<std::vector<Elem>>& classes) {
  std::vector<int> cls(carrier.order(), -1);
  for (size_t i = 0; i < classes.size(); ++i)
    for (Elem a : classes[i]) {
      if (a < 0 || a >= carrier.order() || cls[a] >= 0)
        throw structural_error("partition is malformed");
      cls[a] = static_cast<int>(i);
    }
  for (int c : cls)
    if (c < 0) throw structural_error("partition does not cover the carrier");
  ElemSet n;
  for (Elem a = 0; a < carrier.order(); ++a)
    if (cls[a] == cls[0]) n.add(a);
  EffEqRelation r = from_normal(carrier, n);
  // the claimed classes must be exactly the cosets
  for (Elem a = 0; a < carrier.order(); ++a)
    for (Elem b = 0; b < carrier.order(); ++b)
      if ((cls[a] == cls[b]) != r.related(a, b))
        throw structural_error("partition is not a coset partition");
  return r;
}

EffEqRelation EffEqRelation::discrete(const FiniteRpoGroup& carrier) {
  return from_normal(carrier, ElemSet::single(0));
}

EffEqRelation EffEqRelation::indiscrete(const FiniteRpoGroup& carrier) {
  return from_normal(carrier, carrier.group.full_set());
}

EffEqRelation eff_rel_of(const RpoMorphism& f) {
  if (!check_morphism(f))
    throw precondition_error("eff_rel_of: input is not a morphism");
  ElemSet n;
  for (Elem a = 0; a < f.dom.order(); ++a)
    if (f.map[a] == 0) n.add(a);
  return EffEqRelation::from_normal(f.dom, n);
}

PairRelation rel_compose(const EffEqRelation& r, const EffEqRelation& s) {
  if (r.carrier.order() != s.carrier.order())
    throw structural_error("rel_compose: carrier mismatch");
  PairRelation out;
  const int n = r.carrier.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!r.related(a, b)) continue;
      for (Elem c = 0; c < n; ++c)
        if (s.related(b, c)) out.group_pairs.insert({a, c});
    }
  for (auto [a, b] : r.cone_pairs)
    for (Elem c : s.carrier.cone.members())
      if (s.cone_pairs.count({b, c})) out.cone_pairs.insert({a, c});
  return out;
}

Verdict permutes(const EffEqRelation& r, const EffEqRelation& s) {
  PairRelation rs = rel_compose(r, s);
  PairRelation sr = rel_compose(s, r);
  auto diff = [&](const std::set<std::pair<Elem, Elem>>& x,
                  const std::set<std::pair<Elem, Elem>>& y)
      -> std::optional<std::pair<Elem, Elem>> {
    for (auto p : x)
      if (!y.count(p)) return p;
    return std::nullopt;
  };
  const FiniteGroup& G = r.carrier.group;
  for (auto [x, y, lvl] :
       {std::tuple{&rs.group_pairs, &sr.group_pairs, "group pairs"},
        std::tuple{&rs.cone_pairs, &sr.cone_pairs, "cone pairs"}}) {
    if (auto p = diff(*x, *y))
      return Verdict::no("permutability",
                         {bind(G, "a", p->first), bind(G, "c", p->second)},
                         std::string(lvl) + ": in r.s only");
    if (auto p = diff(*y, *x))
      return Verdict::no("permutability",
                         {bind(G, "a", p->first), bind(G, "c", p->second)},
                         std::string(lvl) + ": in s.r only");
  }
  return Verdict::yes("permutability");
}

NormalSubobject normalization(const EffEqRelation& r) {
  ElemSet cone;
  for (Elem b : r.carrier.cone.members())
    if (r.cone_pairs.count({0, b})) cone.add(b);
  return {r.normal_subgroup, cone};
}

Verdict huq_commute(const FiniteRpoGroup& carrier, const NormalSubobject& x,
                    const NormalSubobject& y) {
  const FiniteGroup& G = carrier.group;
  for (Elem a : x.subgroup.members())
    for (Elem b : y.subgroup.members())
      if (G.op(a, b) != G.op(b, a))
        return Verdict::no("commutation", {bind(G, "a", a), bind(G, "b", b)});
  return Verdict::yes("commutation");
}

Verdict smith_commute(const EffEqRelation& r, const EffEqRelation& s) {
  if (r.carrier.order() != s.carrier.order())
    throw structural_error("smith_commute: carrier mismatch");
  const FiniteGroup& G = r.carrier.group;
  const int n = G.order();

  struct Triple {
    Elem a, b, c;
  };
  std::vector<Triple> triples;
  std::vector<int> index(n * n * n, -1);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!r.related(a, b)) continue;
      for (Elem c = 0; c < n; ++c)
        if (s.related(b, c)) {
          index[(a * n + b) * n + c] = static_cast<int>(triples.size());
          triples.push_back({a, b, c});
        }
    }

  IndexedGroup pullback{
      static_cast<int>(triples.size()), [&](int i, int j) {
        const Triple &t = triples[i], &u = triples[j];
        return index[(G.op(t.a, u.a) * n + G.op(t.b, u.b)) * n +
                     G.op(t.c, u.c)];
      }};
  auto connector = [&](const Triple& t) {
    return G.op(G.sub(t.a, t.b), t.c);  // a - b + c
  };
  // connector agrees with the projections on the two diagonals
  for (const Triple& t : triples) {
    if (t.a == t.b && connector(t) != t.c)
      return Verdict::no("diagonal-compatibility",
                         {bind(G, "b", t.b), bind(G, "c", t.c)});
    if (t.b == t.c && connector(t) != t.a)
      return Verdict::no("diagonal-compatibility",
                         {bind(G, "a", t.a), bind(G, "b", t.b)});
  }
  if (auto bad = hom_violation(
          pullback, [&](int i) { return connector(triples[i]); },
          [&](int x, int y) { return G.op(x, y); })) {
    const Triple &t = triples[bad->first], &u = triples[bad->second];
    return Verdict::no("connector-homomorphism",
                       {bind(G, "a", t.a), bind(G, "b", t.b),
                        bind(G, "c", t.c), bind(G, "a'", u.a),
                        bind(G, "b'", u.b), bind(G, "c'", u.c)});
  }
  for (auto [a, b] : r.cone_pairs)
    for (Elem c : s.carrier.cone.members()) {
      if (!s.cone_pairs.count({b, c})) continue;
      Elem p = G.op(G.sub(a, b), c);
      if (!r.carrier.cone.contains(p))
        return Verdict::no("connector-monotonicity",
                           {bind(G, "a", a), bind(G, "b", b), bind(G, "c", c),
                            bind(G, "a-b+c", p)});
    }
  return Verdict::yes("smith connector");
}

bool is_s_effective(const EffEqRelation& r) {
  const FiniteGroup& G = r.carrier.group;
  for (auto [a, b] : r.cone_pairs) {
    if (!r.carrier.cone.contains(G.sub(a, b))) return false;
    if (!r.carrier.cone.contains(G.sub(b, a))) return false;
  }
  return true;
}

}  // namespace rpog
