#include "rpog/internal.hpp"

#include <algorithm>
#include <functional>

#include "rpog/indexed.hpp"

namespace rpog {

namespace {

Binding bind(const FiniteGroup& g, std::string name, Elem a) {
  return {std::move(name), g.element_name(a), a};
}

// hom enumeration from an indexed group, by generator images with
// propagation; used by the composition search
std::vector<std::vector<int>> indexed_homs(const IndexedGroup& dom,
                                           const FiniteGroup& cod) {
  std::vector<int> gens = generating_sequence(dom);
  std::vector<int> map(dom.n, -1);
  map[0] = 0;
  std::vector<std::vector<int>> out;
  std::function<void(size_t)> dfs = [&](size_t gi) {
    if (gi == gens.size()) {
      out.push_back(map);
      return;
    }
    for (Elem img = 0; img < cod.order(); ++img) {
      std::vector<int> saved = map;
      map[gens[gi]] = img;
      bool ok = true, changed = true;
      while (changed && ok) {
        changed = false;
        for (int a = 0; a < dom.n && ok; ++a) {
          if (map[a] < 0) continue;
          for (int b = 0; b < dom.n; ++b) {
            if (map[b] < 0) continue;
            int ab = dom.op(a, b);
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

}  // namespace

void ReflexiveGraph::check() const {
  if (!validate(apex) || !validate(base))
    throw precondition_error("reflexive graph: invalid objects");
  if (!check_morphism(d) || !check_morphism(c) || !check_morphism(e))
    throw precondition_error("reflexive graph: d, c or e is not a morphism");
  for (Elem x = 0; x < base.order(); ++x)
    if (d.map[e.map[x]] != x || c.map[e.map[x]] != x)
      throw precondition_error("reflexive graph: e does not split d and c");
}

Verdict PrecrossedModule::check() const {
  if (!validate(base) || !validate(ker))
    throw precondition_error("precrossed module: invalid objects");
  if (Verdict v = check_morphism(boundary); !v) return v;
  if (Verdict v = action.check(); !v) return v;
  const FiniteGroup& B = base.group;
  for (Elem x = 0; x < B.order(); ++x)
    for (Elem a = 0; a < ker.order(); ++a)
      if (boundary.map[action.act[x][a]] != B.conj(x, boundary.map[a]))
        return Verdict::no("equivariance",
                           {bind(B, "x", x), bind(ker.group, "a", a)});
  return Verdict::yes("precrossed module");
}

ComposablePairs composable_pairs(const ReflexiveGraph& g) {
  const int n = g.apex.order();
  ComposablePairs out;
  out.apex_order = n;
  out.index.assign(static_cast<size_t>(n) * n, -1);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (g.d.map[a] == g.c.map[b]) {
        out.index[static_cast<size_t>(a) * n + b] =
            static_cast<int>(out.pairs.size());
        out.pairs.push_back({a, b});
      }
  return out;
}

std::vector<Elem> unique_m(const ReflexiveGraph& g) {
  g.check();
  const FiniteGroup& A = g.apex.group;
  ComposablePairs pb = composable_pairs(g);
  std::vector<Elem> m(pb.pairs.size());
  for (size_t i = 0; i < pb.pairs.size(); ++i) {
    auto [a, b] = pb.pairs[i];
    m[i] = A.op(A.sub(b, g.e.map[g.c.map[b]]), a);  // b - ec(b) + a
  }
  return m;
}

Verdict is_internal_category(const ReflexiveGraph& g) {
  g.check();
  const FiniteGroup& A = g.apex.group;
  const int n = A.order();
  ComposablePairs pb = composable_pairs(g);
  std::vector<Elem> m = unique_m(g);

  IndexedGroup pullback{
      static_cast<int>(pb.pairs.size()), [&](int i, int j) {
        auto [a, b] = pb.pairs[i];
        auto [a2, b2] = pb.pairs[j];
        return pb.index[static_cast<size_t>(A.op(a, a2)) * n + A.op(b, b2)];
      }};
  // The pullback group decomposes as (u,v) = (ec(v), v) + (-ec(v)+u, 0),
  // so lifted apex generators together with kernel generators generate it.
  std::vector<int> pgens;
  {
    ElemSet kernel_mask;
    for (Elem a = 0; a < n; ++a)
      if (g.d.map[a] == 0) kernel_mask.add(a);
    ElemSet have = ElemSet::single(0);
    for (Elem k : kernel_mask.members()) {
      if (have.contains(k)) continue;
      pgens.push_back(pb.find(k, 0));
      ElemSet grow = have | ElemSet::single(k);
      have = A.closure(grow) & kernel_mask;
      // closure stays inside the kernel subgroup
    }
    for (Elem b : A.generating_sequence())
      pgens.push_back(pb.find(g.e.map[g.c.map[b]], b));
  }
  if (auto bad = hom_violation(
          pullback, pgens, [&](int i) { return m[i]; },
          [&](int x, int y) { return A.op(x, y); })) {
    auto [a, b] = pb.pairs[bad->first];
    auto [a2, b2] = pb.pairs[bad->second];
    return Verdict::no("m-homomorphism",
                       {bind(A, "a", a), bind(A, "b", b), bind(A, "a'", a2),
                        bind(A, "b'", b2)});
  }
  for (size_t i = 0; i < pb.pairs.size(); ++i) {
    auto [a, b] = pb.pairs[i];
    if (g.apex.cone.contains(a) && g.apex.cone.contains(b) &&
        !g.apex.cone.contains(m[i]))
      return Verdict::no("m-monotonicity",
                         {bind(A, "a", a), bind(A, "b", b),
                          bind(A, "m(a,b)", m[i])});
  }
  return Verdict::yes("internal category");
}

std::vector<Elem> sigma_of(const ReflexiveGraph& g) {
  g.check();
  const FiniteGroup& A = g.apex.group;
  std::vector<Elem> s(g.apex.order());
  for (Elem a = 0; a < g.apex.order(); ++a)
    s[a] = A.op(A.sub(g.e.map[g.c.map[a]], a), g.e.map[g.d.map[a]]);
  return s;
}

Verdict is_groupoid(const ReflexiveGraph& g) {
  if (Verdict cat = is_internal_category(g); !cat)
    throw precondition_error(
        "is_groupoid: the graph is not an internal category (" + cat.law +
        " fails)");
  const FiniteGroup& A = g.apex.group;
  std::vector<Elem> s = sigma_of(g);
  for (Elem a = 0; a < g.apex.order(); ++a)
    for (Elem b = 0; b < g.apex.order(); ++b)
      if (s[A.op(a, b)] != A.op(s[a], s[b]))
        return Verdict::no("sigma-homomorphism",
                           {bind(A, "a", a), bind(A, "b", b)});
  for (Elem a : g.apex.cone.members())
    if (!g.apex.cone.contains(s[a]))
      return Verdict::no("sigma-monotonicity",
                         {bind(A, "a", a), bind(A, "sigma(a)", s[a])});
  return Verdict::yes("groupoid");
}

PrecrossedModule graph_to_pxmod(const ReflexiveGraph& g) {
  g.check();
  if (Verdict v = is_schreier(g.point()); !v)
    throw precondition_error("graph_to_pxmod: the underlying point is not " +
                             std::string("Schreier (witness ") +
                             v.witness_text() + ")");
  const FiniteGroup& A = g.apex.group;
  ElemSet kmask;
  for (Elem a = 0; a < A.order(); ++a)
    if (g.d.map[a] == 0) kmask.add(a);
  SubgroupPresentation sub = subgroup_as_group(A, kmask, "ker(d)");
  Cone kcone;
  for (int i = 0; i < sub.group.order(); ++i)
    if (g.apex.cone.contains(sub.embed[i])) kcone.add(i);
  FiniteRpoGroup ker{sub.group, kcone};

  std::vector<Elem> bmap(ker.order());
  for (int i = 0; i < ker.order(); ++i) bmap[i] = g.c.map[sub.embed[i]];
  RpoMorphism boundary{ker, g.base, std::move(bmap)};

  std::vector<std::vector<Elem>> act(g.base.order(),
                                     std::vector<Elem>(ker.order()));
  for (Elem y = 0; y < g.base.order(); ++y)
    for (int i = 0; i < ker.order(); ++i)
      act[y][i] = sub.position[A.conj(g.e.map[y], sub.embed[i])];
  ActionMorphism action{g.base, ker, std::move(act)};

  return {g.base, std::move(ker), std::move(boundary), std::move(action)};
}

ReflexiveGraph pxmod_to_graph(const PrecrossedModule& px) {
  if (Verdict v = px.check(); !v)
    throw precondition_error("pxmod_to_graph: " + v.law +
                             " fails (witness " + v.witness_text() + ")");
  SemidirectPoint sp = semidirect(px.action);
  const int nb = px.base.order();
  std::vector<Elem> cmap(sp.point.total.order());
  for (Elem k = 0; k < px.ker.order(); ++k)
    for (Elem x = 0; x < nb; ++x)
      cmap[k * nb + x] = px.base.group.op(px.boundary.map[k], x);
  RpoMorphism c{sp.point.total, px.base, std::move(cmap)};
  return {sp.point.total, px.base, sp.point.d, std::move(c), sp.point.e};
}

Verdict check_peiffer(const PrecrossedModule& px) {
  if (Verdict v = px.check(); !v)
    throw precondition_error("check_peiffer: invalid precrossed module (" +
                             v.law + ")");
  const FiniteGroup& K = px.ker.group;
  for (Elem a = 0; a < K.order(); ++a)
    for (Elem b = 0; b < K.order(); ++b)
      if (px.action.act[px.boundary.map[a]][b] != K.conj(a, b))
        return Verdict::no("peiffer", {bind(K, "a", a), bind(K, "b", b)});
  return Verdict::yes("peiffer");
}

Verdict is_crossed_iff_category(const PrecrossedModule& px) {
  Verdict peiffer = check_peiffer(px);
  Verdict category = is_internal_category(pxmod_to_graph(px));
  if (peiffer.holds == category.holds)
    return Verdict::yes("crossed-iff-category",
                        peiffer.holds ? "both hold" : "both fail");
  return Verdict::no("crossed-iff-category", {},
                     std::string("peiffer ") +
                         (peiffer.holds ? "holds" : "fails") +
                         " but category " +
                         (category.holds ? "holds" : "fails") +
                         "; this indicates an implementation bug");
}

ElemSet effective_relation_cone(const RpoMorphism& boundary) {
  if (!check_morphism(boundary))
    throw precondition_error("effective_relation_cone: not a morphism");
  const int nb = boundary.cod.order();
  if (boundary.dom.order() * nb > kMaxOrder)
    throw structural_error("relation carrier exceeds the order cap");
  ElemSet out;
  for (Elem a = 0; a < boundary.dom.order(); ++a)
    for (Elem b = 0; b < nb; ++b)
      if (boundary.cod.cone.contains(b) &&
          boundary.cod.cone.contains(
              boundary.cod.group.op(boundary.map[a], b)))
        out.add(a * nb + b);
  return out;
}

ReflexiveGraph relation_graph(const RpoMorphism& boundary, ElemSet apex_cone) {
  if (!check_morphism(boundary) || !boundary.injective())
    throw precondition_error("relation_graph: boundary must be an injective morphism");
  const FiniteGroup& B = boundary.cod.group;
  ElemSet image = boundary.image();
  if (!B.is_normal(image))
    throw precondition_error("relation_graph: the image must be normal");
  std::vector<Elem> preimage(B.order(), -1);
  for (Elem a = 0; a < boundary.dom.order(); ++a)
    preimage[boundary.map[a]] = a;

  // conjugation action transported through the boundary
  std::vector<std::vector<Elem>> act(B.order(),
                                     std::vector<Elem>(boundary.dom.order()));
  for (Elem x = 0; x < B.order(); ++x)
    for (Elem a = 0; a < boundary.dom.order(); ++a)
      act[x][a] = preimage[B.conj(x, boundary.map[a])];

  const int nk = boundary.dom.order(), nb = B.order();
  const int n = nk * nb;
  if (n > kMaxOrder)
    throw structural_error("relation carrier exceeds the order cap");
  auto idx = [&](Elem k, Elem x) { return k * nb + x; };
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<std::string> names(n);
  const FiniteGroup& K = boundary.dom.group;
  for (Elem k = 0; k < nk; ++k)
    for (Elem x = 0; x < nb; ++x) {
      names[idx(k, x)] = "(" + K.element_name(k) + "," + B.element_name(x) + ")";
      for (Elem l = 0; l < nk; ++l)
        for (Elem y = 0; y < nb; ++y)
          table[idx(k, x)][idx(l, y)] = idx(K.op(k, act[x][l]), B.op(x, y));
    }
  FiniteRpoGroup apex{
      FiniteGroup("rel(" + K.name() + ")", std::move(table), std::move(names)),
      apex_cone};
  std::vector<Elem> dmap(n), cmap(n), emap(nb);
  for (Elem k = 0; k < nk; ++k)
    for (Elem x = 0; x < nb; ++x) {
      dmap[idx(k, x)] = x;
      cmap[idx(k, x)] = B.op(boundary.map[k], x);
    }
  for (Elem x = 0; x < nb; ++x) emap[x] = idx(0, x);
  return {apex, boundary.cod, RpoMorphism(apex, boundary.cod, std::move(dmap)),
          RpoMorphism(apex, boundary.cod, std::move(cmap)),
          RpoMorphism(boundary.cod, apex, std::move(emap))};
}

Verdict is_effective(const ReflexiveGraph& g) {
  g.check();
  const int n = g.apex.order();
  // the pair map (c,d) must present an equivalence relation
  std::vector<int> pair_of(static_cast<size_t>(g.base.order()) *
                               g.base.order(),
                           -1);
  for (Elem a = 0; a < n; ++a) {
    size_t key = static_cast<size_t>(g.c.map[a]) * g.base.order() + g.d.map[a];
    if (pair_of[key] >= 0)
      throw precondition_error("is_effective: the pair map is not injective");
    pair_of[key] = a;
  }
  auto related = [&](Elem x, Elem y) {
    return pair_of[static_cast<size_t>(x) * g.base.order() + y] >= 0;
  };
  for (Elem x = 0; x < g.base.order(); ++x) {
    if (!related(x, x))
      throw precondition_error("is_effective: the relation is not reflexive");
    for (Elem y = 0; y < g.base.order(); ++y) {
      if (!related(x, y)) continue;
      if (!related(y, x))
        throw precondition_error("is_effective: the relation is not symmetric");
      for (Elem z = 0; z < g.base.order(); ++z)
        if (related(y, z) && !related(x, z))
          throw precondition_error(
              "is_effective: the relation is not transitive");
    }
  }

  ElemSet expected;
  for (Elem a = 0; a < n; ++a)
    if (g.base.cone.contains(g.c.map[a]) && g.base.cone.contains(g.d.map[a]))
      expected.add(a);
  if (g.apex.cone != expected) {
    Elem w = (expected - g.apex.cone).first();
    if (w < 0) w = (g.apex.cone - expected).first();
    return Verdict::no("effective-cone",
                       {bind(g.apex.group, "t", w)},
                       "apex cone differs from the both-legs-positive cone");
  }
  // with the effective cone, the inversion map is monotone
  std::vector<Elem> s = sigma_of(g);
  for (Elem a : g.apex.cone.members())
    if (!g.apex.cone.contains(s[a]))
      return Verdict::no("effective-sigma",
                         {bind(g.apex.group, "a", a)},
                         "inversion fails on an effective cone; "
                         "this indicates an implementation bug");
  return Verdict::yes("effective");
}

InternalCategoryVerdict full_verdict(const ReflexiveGraph& g) {
  g.check();
  InternalCategoryVerdict out;
  out.is_schreier_graph = is_schreier(g.point());
  out.is_internal_category = is_internal_category(g);
  if (out.is_internal_category.holds) {
    out.m = unique_m(g);
    out.is_groupoid = is_groupoid(g);
    if (out.is_groupoid->holds) out.sigma = sigma_of(g);
  }
  if (out.is_schreier_graph.holds) {
    // inverse-closedness of the kernel cone
    const FiniteGroup& A = g.apex.group;
    Verdict v = Verdict::yes("kernel-cone-group");
    for (Elem a : g.apex.cone.members()) {
      if (g.d.map[a] != 0) continue;
      if (!g.apex.cone.contains(A.inv(a))) {
        v = Verdict::no("kernel-cone-group", {bind(A, "a", a)},
                        "kernel cone element without inverse in the cone");
        break;
      }
    }
    out.kernel_cone_is_group = std::move(v);
  }
  return out;
}

std::vector<std::vector<Elem>> composition_morphism_search(
    const ReflexiveGraph& g) {
  g.check();
  const FiniteGroup& A = g.apex.group;
  const int n = A.order();
  ComposablePairs pb = composable_pairs(g);
  IndexedGroup pullback{
      static_cast<int>(pb.pairs.size()), [&](int i, int j) {
        auto [a, b] = pb.pairs[i];
        auto [a2, b2] = pb.pairs[j];
        return pb.index[static_cast<size_t>(A.op(a, a2)) * n + A.op(b, b2)];
      }};

  std::vector<std::vector<Elem>> found;
  for (const auto& f : indexed_homs(pullback, A)) {
    bool ok = true;
    for (size_t i = 0; i < pb.pairs.size() && ok; ++i) {
      auto [a, b] = pb.pairs[i];
      // boundary compatibility and units
      if (g.d.map[f[i]] != g.d.map[b] || g.c.map[f[i]] != g.c.map[a]) ok = false;
      if (ok && b == g.e.map[g.d.map[a]] && f[i] != a) ok = false;
      if (ok && a == g.e.map[g.c.map[b]] && f[i] != b) ok = false;
      // monotone
      if (ok && g.apex.cone.contains(a) && g.apex.cone.contains(b) &&
          !g.apex.cone.contains(f[i]))
        ok = false;
    }
    if (!ok) continue;
    // associativity over composable triples
    for (size_t i = 0; i < pb.pairs.size() && ok; ++i) {
      auto [a, b] = pb.pairs[i];
      for (Elem c = 0; c < n && ok; ++c) {
        if (g.d.map[b] != g.c.map[c]) continue;
        int bc = pb.index[static_cast<size_t>(b) * n + c];
        int ab = static_cast<int>(i);
        int left = pb.index[static_cast<size_t>(f[ab]) * n + c];
        int right = pb.index[static_cast<size_t>(a) * n + f[bc]];
        if (left < 0 || right < 0 || f[left] != f[right]) ok = false;
      }
    }
    if (ok) found.push_back(f);
  }
  return found;
}

}  // namespace rpog
