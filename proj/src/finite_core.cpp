#include "rpog/finite_core.hpp"

#include <algorithm>
#include <functional>

namespace rpog {

namespace {

Binding bind(const FiniteGroup& g, std::string name, Elem a) {
  return {std::move(name), g.element_name(a), a};
}

}  // namespace

Verdict validate(const FiniteRpoGroup& g) {
  const FiniteGroup& G = g.group;
  const int n = G.order();

  for (Elem a = 0; a < n; ++a) {
    if (G.op(0, a) != a)
      return Verdict::no("identity", {bind(G, "a", a)},
                         "0+a differs from a");
    if (G.op(a, 0) != a)
      return Verdict::no("identity", {bind(G, "a", a)},
                         "a+0 differs from a");
  }
  for (Elem a = 0; a < n; ++a)
    if (G.inv(a) < 0)
      return Verdict::no("inverses", {bind(G, "a", a)},
                         "no two-sided inverse");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (G.op(G.op(a, b), c) != G.op(a, G.op(b, c)))
          return Verdict::no(
              "associativity",
              {bind(G, "a", a), bind(G, "b", b), bind(G, "c", c)});
  // Latin square is implied by the laws above in principle; check anyway
  // so corrupted tables are named precisely.
  for (Elem a = 0; a < n; ++a) {
    ElemSet row, col;
    for (Elem b = 0; b < n; ++b) {
      row.add(G.op(a, b));
      col.add(G.op(b, a));
    }
    if (row.size() != n || col.size() != n)
      return Verdict::no("cancellation", {bind(G, "a", a)},
                         "row or column is not a permutation");
  }

  if (!g.cone.subset_of(G.full_set()))
    throw structural_error("cone contains out-of-range elements");
  if (!g.cone.contains(0))
    return Verdict::no("cone-identity", {}, "cone does not contain 0");
  for (Elem p : g.cone.members())
    for (Elem q : g.cone.members())
      if (!g.cone.contains(G.op(p, q)))
        return Verdict::no("cone-closure",
                           {bind(G, "p", p), bind(G, "q", q),
                            bind(G, "p+q", G.op(p, q))});
  return Verdict::yes("right-preordered group");
}

Verdict is_preordered(const FiniteRpoGroup& g) {
  const FiniteGroup& G = g.group;
  for (Elem x = 0; x < G.order(); ++x)
    for (Elem p : g.cone.members()) {
      Elem c = G.conj(x, p);
      if (!g.cone.contains(c))
        return Verdict::no(
            "conjugation-closure",
            {bind(G, "x", x), bind(G, "p", p), bind(G, "x+p-x", c)});
    }
  return Verdict::yes("conjugation-closure");
}

Verdict check_morphism(const RpoMorphism& f) {
  const FiniteGroup& D = f.dom.group;
  const FiniteGroup& C = f.cod.group;
  if (f.map[0] != 0)
    return Verdict::no("homomorphism", {bind(D, "a", 0)},
                       "identity is not preserved");
  for (Elem a = 0; a < D.order(); ++a)
    for (Elem b = 0; b < D.order(); ++b)
      if (f.map[D.op(a, b)] != C.op(f.map[a], f.map[b]))
        return Verdict::no("homomorphism", {bind(D, "a", a), bind(D, "b", b)});
  for (Elem p : f.dom.cone.members())
    if (!f.cod.cone.contains(f.map[p]))
      return Verdict::no("monotonicity",
                         {bind(D, "p", p), bind(C, "f(p)", f.map[p])});
  return Verdict::yes("morphism");
}

KernelResult kernel(const RpoMorphism& f) {
  if (!check_morphism(f))
    throw precondition_error("kernel: input is not a morphism");
  ElemSet k;
  for (Elem a = 0; a < f.dom.order(); ++a)
    if (f.map[a] == 0) k.add(a);
  SubgroupPresentation sub = subgroup_as_group(
      f.dom.group, k, "ker(" + f.dom.group.name() + "->" + f.cod.group.name() + ")");
  Cone kcone;
  for (int i = 0; i < sub.group.order(); ++i)
    if (f.dom.cone.contains(sub.embed[i])) kcone.add(i);
  FiniteRpoGroup object{std::move(sub.group), kcone};
  RpoMorphism inclusion{object, f.dom, sub.embed};
  return {std::move(object), std::move(inclusion)};
}

Verdict is_normal_mono(const RpoMorphism& f) {
  if (!f.injective() || !check_morphism(f))
    throw precondition_error(
        "is_normal_mono: input must be an injective morphism");
  const FiniteGroup& C = f.cod.group;
  ElemSet im = f.image();
  for (Elem x = 0; x < C.order(); ++x)
    for (Elem a : im.members())
      if (!im.contains(C.conj(x, a)))
        return Verdict::no("normality",
                           {bind(C, "x", x), bind(C, "a", a),
                            bind(C, "x+a-x", C.conj(x, a))});
  ElemSet mapped_cone;
  for (Elem p : f.dom.cone.members()) mapped_cone.add(f.map[p]);
  ElemSet expected = im & f.cod.cone;
  if (mapped_cone != expected) {
    Elem q = (expected - mapped_cone).first();
    if (q < 0) q = (mapped_cone - expected).first();
    return Verdict::no("cone-equality", {bind(C, "q", q)},
                       "mapped cone differs from image-intersect-cone");
  }
  return Verdict::yes("normal monomorphism");
}

std::vector<Cone> enumerate_cones(const FiniteGroup& g) {
  return g.submonoids();
}

std::vector<std::vector<Elem>> group_homs(const FiniteGroup& dom,
                                          const FiniteGroup& cod) {
  const int n = dom.order();
  std::vector<Elem> gens = dom.generating_sequence();
  std::vector<std::vector<Elem>> out;

  // Extend a partial map (defined on the subgroup generated by the
  // assigned generators) by propagating products until stable.
  std::vector<Elem> map(n, -1);
  map[0] = 0;

  std::function<void(size_t)> dfs = [&](size_t gi) {
    if (gi == gens.size()) {
      out.push_back(map);
      return;
    }
    Elem g = gens[gi];
    for (Elem img = 0; img < cod.order(); ++img) {
      std::vector<Elem> saved = map;
      map[g] = img;
      bool ok = true;
      bool changed = true;
      while (changed && ok) {
        changed = false;
        for (Elem a = 0; a < n && ok; ++a) {
          if (map[a] < 0) continue;
          for (Elem b = 0; b < n; ++b) {
            if (map[b] < 0) continue;
            Elem ab = dom.op(a, b);
            Elem want = cod.op(map[a], map[b]);
            if (map[ab] < 0) {
              map[ab] = want;
              changed = true;
            } else if (map[ab] != want) {
              ok = false;
              break;
            }
          }
        }
      }
      if (ok) dfs(gi + 1);
      map = std::move(saved);
    }
  };
  dfs(0);
  return out;
}

bool is_group_hom(const FiniteGroup& dom, const FiniteGroup& cod,
                  const std::vector<Elem>& map) {
  if (map[0] != 0) return false;
  for (Elem a = 0; a < dom.order(); ++a)
    for (Elem b = 0; b < dom.order(); ++b)
      if (map[dom.op(a, b)] != cod.op(map[a], map[b])) return false;
  return true;
}

std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& g) {
  std::vector<std::vector<Elem>> out;
  for (auto& h : group_homs(g, g))
    if (ElemSet::of(h).size() == g.order()) out.push_back(std::move(h));
  std::ranges::sort(out);
  return out;
}

std::vector<std::vector<Elem>> monotone_automorphisms(const FiniteRpoGroup& g) {
  std::vector<std::vector<Elem>> out;
  for (auto& f : automorphisms(g.group)) {
    bool mono = true;
    for (Elem p : g.cone.members())
      if (!g.cone.contains(f[p])) {
        mono = false;
        break;
      }
    if (mono) out.push_back(std::move(f));
  }
  return out;
}

std::vector<RpoMorphism> monotone_morphisms(const FiniteRpoGroup& dom,
                                            const FiniteRpoGroup& cod) {
  std::vector<RpoMorphism> out;
  for (auto& h : group_homs(dom.group, cod.group)) {
    bool mono = true;
    for (Elem p : dom.cone.members())
      if (!cod.cone.contains(h[p])) {
        mono = false;
        break;
      }
    if (mono) out.emplace_back(dom, cod, std::move(h));
  }
  return out;
}

std::optional<std::vector<Elem>> find_group_iso(const FiniteGroup& a,
                                                const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  for (auto& h : group_homs(a, b))
    if (ElemSet::of(h).size() == a.order()) return h;
  return std::nullopt;
}

std::optional<std::vector<Elem>> find_rpo_iso(const FiniteRpoGroup& a,
                                              const FiniteRpoGroup& b) {
  if (a.order() != b.order() || a.cone.size() != b.cone.size())
    return std::nullopt;
  for (auto& h : group_homs(a.group, b.group)) {
    if (ElemSet::of(h).size() != a.order()) continue;
    ElemSet mapped;
    for (Elem p : a.cone.members()) mapped.add(h[p]);
    if (mapped == b.cone) return h;
  }
  return std::nullopt;
}

bool rpo_isomorphic(const FiniteRpoGroup& a, const FiniteRpoGroup& b) {
  return find_rpo_iso(a, b).has_value();
}

}  // namespace rpog
