#include "rpog/schreier.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace rpog {

namespace {

Binding bind(const FiniteGroup& g, std::string name, Elem a) {
  return {std::move(name), g.element_name(a), a};
}

}  // namespace

void SplitPoint::check() const {
  if (!validate(total) || !validate(base))
    throw precondition_error("split point: invalid objects");
  if (!check_morphism(d) || !check_morphism(e))
    throw precondition_error("split point: d or e is not a morphism");
  for (Elem x = 0; x < base.order(); ++x)
    if (d.map[e.map[x]] != x)
      throw precondition_error("split point: d o e is not the identity");
}

Verdict is_schreier(const SplitPoint& p) {
  const FiniteGroup& T = p.total.group;
  for (Elem a : p.total.cone.members()) {
    Elem residue = T.sub(a, p.e.map[p.d.map[a]]);
    if (!p.total.cone.contains(residue))
      return Verdict::no("schreier",
                         {bind(T, "a", a), bind(T, "a-ed(a)", residue)});
  }
  return Verdict::yes("schreier");
}

Verdict ActionMorphism::check() const {
  const FiniteGroup& B = base.group;
  const FiniteGroup& T = target.group;
  if (static_cast<int>(act.size()) != B.order())
    throw structural_error("action: wrong number of automorphisms");
  for (const auto& f : act) {
    if (static_cast<int>(f.size()) != T.order())
      throw structural_error("action: automorphism of the wrong length");
    if (!is_group_hom(T, T, f) || ElemSet::of(f).size() != T.order())
      return Verdict::no("action-automorphism", {},
                         "an image is not a group automorphism");
  }
  for (Elem x = 0; x < B.order(); ++x)
    for (Elem y = 0; y < B.order(); ++y)
      for (Elem k = 0; k < T.order(); ++k)
        if (act[B.op(x, y)][k] != act[x][act[y][k]])
          return Verdict::no("action-homomorphism",
                             {bind(B, "x", x), bind(B, "y", y)});
  for (Elem p : base.cone.members())
    for (Elem k : target.cone.members())
      if (!target.cone.contains(act[p][k]))
        return Verdict::no("action-monotonicity",
                           {bind(B, "p", p), bind(T, "k", k),
                            bind(T, "act(p)(k)", act[p][k])});
  return Verdict::yes("action");
}

int AutRpo::index_of(const std::vector<Elem>& f) const {
  auto it = std::ranges::find(auts, f);
  return it == auts.end() ? -1 : static_cast<int>(it - auts.begin());
}

AutRpo aut_rpo(const FiniteRpoGroup& g) {
  if (!validate(g)) throw precondition_error("aut_rpo: invalid input");
  std::vector<std::vector<Elem>> auts = automorphisms(g.group);
  std::vector<Elem> id(g.order());
  for (int i = 0; i < g.order(); ++i) id[i] = i;
  auto it = std::ranges::find(auts, id);
  std::iter_swap(auts.begin(), it);
  std::ranges::sort(auts.begin() + 1, auts.end());

  const int n = static_cast<int>(auts.size());
  if (n > kMaxOrder)
    throw structural_error("automorphism group exceeds the order cap");
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  auto index_of = [&](const std::vector<Elem>& f) {
    return static_cast<Elem>(std::ranges::find(auts, f) - auts.begin());
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Elem> comp(g.order());
      for (int x = 0; x < g.order(); ++x) comp[x] = auts[i][auts[j][x]];
      table[i][j] = index_of(comp);
    }
  Cone mono;
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (Elem p : g.cone.members())
      if (!g.cone.contains(auts[i][p])) {
        ok = false;
        break;
      }
    if (ok) mono.add(i);
  }
  FiniteGroup grp("Aut(" + g.group.name() + ")", std::move(table));
  return {{std::move(grp), mono}, std::move(auts)};
}

std::vector<std::vector<std::vector<Elem>>> action_tables(
    const FiniteGroup& base, const FiniteGroup& target) {
  std::vector<std::vector<Elem>> auts = automorphisms(target);
  std::map<std::vector<Elem>, int> aut_index;
  for (int i = 0; i < static_cast<int>(auts.size()); ++i)
    aut_index[auts[i]] = i;
  auto compose_idx = [&](int i, int j) {
    std::vector<Elem> comp(target.order());
    for (int x = 0; x < target.order(); ++x) comp[x] = auts[i][auts[j][x]];
    return aut_index.at(comp);
  };
  const int n = base.order();
  std::vector<Elem> gens = base.generating_sequence();

  std::vector<int> map(n, -1);
  map[0] = 0;  // identity automorphism is index 0 of the sorted list
  std::vector<std::vector<std::vector<Elem>>> out;
  std::function<void(size_t)> dfs = [&](size_t gi) {
    if (gi == gens.size()) {
      std::vector<std::vector<Elem>> table(n);
      for (int x = 0; x < n; ++x) table[x] = auts[map[x]];
      out.push_back(std::move(table));
      return;
    }
    for (int img = 0; img < static_cast<int>(auts.size()); ++img) {
      std::vector<int> saved = map;
      map[gens[gi]] = img;
      bool ok = true, changed = true;
      while (changed && ok) {
        changed = false;
        for (int a = 0; a < n && ok; ++a) {
          if (map[a] < 0) continue;
          for (int b = 0; b < n; ++b) {
            if (map[b] < 0) continue;
            int ab = base.op(a, b);
            int want = compose_idx(map[a], map[b]);
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

std::vector<ActionMorphism> monotone_actions(const FiniteRpoGroup& base,
                                             const FiniteRpoGroup& target) {
  std::vector<ActionMorphism> out;
  for (auto& tab : action_tables(base.group, target.group)) {
    bool mono = true;
    for (Elem p : base.cone.members()) {
      for (Elem k : target.cone.members())
        if (!target.cone.contains(tab[p][k])) {
          mono = false;
          break;
        }
      if (!mono) break;
    }
    if (mono) out.push_back({base, target, std::move(tab)});
  }
  return out;
}

SemidirectPoint semidirect(const ActionMorphism& mu) {
  if (Verdict v = mu.check(); !v)
    throw precondition_error("semidirect: invalid action (" + v.law + ": " +
                             v.witness_text() + ")");
  const FiniteGroup& K = mu.target.group;
  const FiniteGroup& B = mu.base.group;
  const int nk = K.order(), nb = B.order();
  const int n = nk * nb;
  if (n > kMaxOrder)
    throw structural_error("semidirect product exceeds the order cap");
  auto idx = [&](Elem k, Elem x) { return k * nb + x; };
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<std::string> names(n);
  for (Elem k = 0; k < nk; ++k)
    for (Elem x = 0; x < nb; ++x) {
      names[idx(k, x)] =
          "(" + K.element_name(k) + "," + B.element_name(x) + ")";
      for (Elem l = 0; l < nk; ++l)
        for (Elem y = 0; y < nb; ++y)
          table[idx(k, x)][idx(l, y)] = idx(K.op(k, mu.act[x][l]), B.op(x, y));
    }
  FiniteGroup grp(K.name() + ":" + B.name(), std::move(table),
                  std::move(names));
  Cone cone;
  for (Elem k : mu.target.cone.members())
    for (Elem x : mu.base.cone.members()) cone.add(idx(k, x));
  FiniteRpoGroup total{std::move(grp), cone};

  std::vector<Elem> dmap(n), emap(nb), i0map(nk);
  for (Elem k = 0; k < nk; ++k)
    for (Elem x = 0; x < nb; ++x) dmap[idx(k, x)] = x;
  for (Elem x = 0; x < nb; ++x) emap[x] = idx(0, x);
  for (Elem k = 0; k < nk; ++k) i0map[k] = idx(k, 0);

  SplitPoint pt{total, mu.base, RpoMorphism(total, mu.base, std::move(dmap)),
                RpoMorphism(mu.base, total, emap)};
  return {std::move(pt), RpoMorphism(mu.target, total, std::move(i0map)),
          RpoMorphism(mu.base, total, std::move(emap))};
}

PointClassification classify_point(const SplitPoint& p) {
  p.check();
  const FiniteGroup& T = p.total.group;
  const FiniteGroup& B = p.base.group;
  ElemSet kmask;
  for (Elem a = 0; a < T.order(); ++a)
    if (p.d.map[a] == 0) kmask.add(a);
  SubgroupPresentation sub = subgroup_as_group(T, kmask, "ker(d)");
  Cone kcone;
  for (int i = 0; i < sub.group.order(); ++i)
    if (p.total.cone.contains(sub.embed[i])) kcone.add(i);
  FiniteRpoGroup kernel{sub.group, kcone};

  // conjugation action of the base through the section
  std::vector<std::vector<Elem>> act(B.order(),
                                     std::vector<Elem>(kernel.order()));
  for (Elem x = 0; x < B.order(); ++x)
    for (int i = 0; i < kernel.order(); ++i)
      act[x][i] = sub.position[T.conj(p.e.map[x], sub.embed[i])];
  ActionMorphism recovered{p.base, kernel, std::move(act)};

  const int nb = B.order();
  auto idx = [&](int k, Elem x) { return k * nb + x; };
  ElemSet transported;
  for (Elem a : p.total.cone.members()) {
    Elem res = T.sub(a, p.e.map[p.d.map[a]]);
    transported.add(idx(sub.position[res], p.d.map[a]));
  }
  ElemSet prod;
  for (int k : kcone.members())
    for (Elem x : p.base.cone.members()) prod.add(idx(k, x));
  ElemSet units;
  for (Elem x : p.base.cone.members())
    if (p.base.cone.contains(B.inv(x))) units.add(x);
  ElemSet lex;
  for (int k = 0; k < kernel.order(); ++k)
    for (Elem x : p.base.cone.members()) {
      if (!units.contains(x) || kcone.contains(k)) lex.add(idx(k, x));
    }

  return {std::move(kernel),
          std::move(recovered),
          transported,
          prod,
          lex,
          prod.subset_of(transported),
          transported.subset_of(lex),
          transported == prod};
}

SplitPoint pullback_point(const SplitPoint& p, const RpoMorphism& f) {
  p.check();
  if (!check_morphism(f))
    throw precondition_error("pullback_point: f is not a morphism");
  if (f.cod.group.table() != p.base.group.table())
    throw structural_error("pullback_point: codomain mismatch");
  const FiniteGroup& T = p.total.group;
  const FiniteGroup& Y = f.dom.group;

  std::vector<std::pair<Elem, Elem>> elems = {{0, 0}};
  for (Elem a = 0; a < T.order(); ++a)
    for (Elem y = 0; y < Y.order(); ++y) {
      if (p.d.map[a] != f.map[y] || (a == 0 && y == 0)) continue;
      elems.push_back({a, y});
    }
  const int n = static_cast<int>(elems.size());
  if (n > kMaxOrder)
    throw structural_error("pullback exceeds the order cap");
  std::vector<int> index(T.order() * Y.order(), -1);
  for (int i = 0; i < n; ++i)
    index[elems[i].first * Y.order() + elems[i].second] = i;

  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = "(" + T.element_name(elems[i].first) + "," +
               Y.element_name(elems[i].second) + ")";
    for (int j = 0; j < n; ++j)
      table[i][j] = index[T.op(elems[i].first, elems[j].first) * Y.order() +
                          Y.op(elems[i].second, elems[j].second)];
  }
  Cone cone;
  for (int i = 0; i < n; ++i)
    if (p.total.cone.contains(elems[i].first) &&
        f.dom.cone.contains(elems[i].second))
      cone.add(i);
  FiniteRpoGroup total{
      FiniteGroup("pullback", std::move(table), std::move(names)), cone};
  std::vector<Elem> dmap(n), emap(Y.order());
  for (int i = 0; i < n; ++i) dmap[i] = elems[i].second;
  for (Elem y = 0; y < Y.order(); ++y)
    emap[y] = index[p.e.map[f.map[y]] * Y.order() + y];
  return {total, f.dom, RpoMorphism(total, f.dom, std::move(dmap)),
          RpoMorphism(f.dom, total, std::move(emap))};
}

ActionRepReport check_action_rep(const FiniteRpoGroup& x,
                                 const FiniteRpoGroup& y, int size_guard) {
  if (!validate(x) || !validate(y))
    throw precondition_error("check_action_rep: invalid input");
  if (x.order() * y.order() > size_guard || x.order() * y.order() > kMaxOrder)
    throw precondition_error("check_action_rep: size guard exceeded");

  const int nk = x.order(), nb = y.order();
  std::vector<std::vector<std::vector<Elem>>> all_actions =
      action_tables(y.group, x.group);
  std::vector<int> monotone;  // indices into all_actions
  for (int i = 0; i < static_cast<int>(all_actions.size()); ++i) {
    bool mono = true;
    for (Elem p : y.cone.members()) {
      for (Elem k : x.cone.members())
        if (!x.cone.contains(all_actions[i][p][k])) {
          mono = false;
          break;
        }
      if (!mono) break;
    }
    if (mono) monotone.push_back(i);
  }

  // Independent side: every group action, every candidate cone on the
  // semidirect product that makes a point with kernel object exactly x
  // and codomain y, kept when the point is Schreier.  A surviving
  // (action, cone) pair is its own isomorphism class: an isomorphism of
  // split extensions fixing both outer objects is the identity map.
  auto idx = [&](Elem k, Elem b) { return k * nb + b; };
  ElemSet kernel_cone_embedded, base_cone_embedded, kernel_full, prod;
  for (Elem k : x.cone.members()) kernel_cone_embedded.add(idx(k, 0));
  for (Elem b : y.cone.members()) base_cone_embedded.add(idx(0, b));
  for (Elem k = 0; k < nk; ++k) kernel_full.add(idx(k, 0));
  for (Elem k : x.cone.members())
    for (Elem b : y.cone.members()) prod.add(idx(k, b));

  int extension_count = 0;
  std::vector<int> per_action_matches(monotone.size(), 0);
  const int n = nk * nb;
  for (int ai = 0; ai < static_cast<int>(all_actions.size()); ++ai) {
    const auto& act = all_actions[ai];
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    for (Elem k = 0; k < nk; ++k)
      for (Elem b = 0; b < nb; ++b)
        for (Elem l = 0; l < nk; ++l)
          for (Elem c = 0; c < nb; ++c)
            table[idx(k, b)][idx(l, c)] =
                idx(x.group.op(k, act[b][l]), y.group.op(b, c));
    FiniteGroup total("ext", std::move(table));

    for (ElemSet cone : total.submonoids()) {
      if ((cone & kernel_full) != kernel_cone_embedded) continue;
      if (!base_cone_embedded.subset_of(cone)) continue;
      bool dmono = true, schreier = true;
      for (Elem a : cone.members()) {
        if (!y.cone.contains(a % nb)) {
          dmono = false;
          break;
        }
        if (!cone.contains(idx(a / nb, 0))) schreier = false;
      }
      if (!dmono || !schreier) continue;
      ++extension_count;
      for (size_t h = 0; h < monotone.size(); ++h)
        if (monotone[h] == ai && cone == prod) ++per_action_matches[h];
    }
  }

  int morphism_count = static_cast<int>(monotone.size());
  Verdict v = Verdict::yes("action-representability");
  if (extension_count != morphism_count)
    v = Verdict::no("action-representability", {},
                    "class count " + std::to_string(extension_count) +
                        " differs from morphism count " +
                        std::to_string(morphism_count));
  else
    for (int m : per_action_matches)
      if (m != 1) {
        v = Verdict::no("action-representability", {},
                        "canonical assignment is not a bijection");
        break;
      }
  return {std::move(v), morphism_count, extension_count};
}

NormalSubobject s_center(const FiniteRpoGroup& g) {
  if (!validate(g)) throw precondition_error("s_center: invalid input");
  // Finite cones are groups, so the indiscrete point is Schreier and the
  // conjugation action is a morphism into the monotone automorphisms.
  ElemSet z = g.group.center();
  return {z, z & g.cone};
}

std::vector<SplitPoint> enumerate_split_points(const FiniteRpoGroup& total) {
  if (!validate(total))
    throw precondition_error("enumerate_split_points: invalid input");
  const FiniteGroup& G = total.group;
  std::vector<SplitPoint> out;
  std::vector<ElemSet> subgroups = G.submonoids();
  for (ElemSet k : G.normal_subgroups()) {
    for (ElemSet h : subgroups) {
      if ((k & h).size() != 1) continue;
      if (k.size() * h.size() != G.order()) continue;
      SubgroupPresentation base_sub = subgroup_as_group(G, h, "base");
      // g decomposes uniquely as (g - h_g) + h_g with g - h_g in k
      std::vector<Elem> dmap(G.order(), -1);
      for (Elem g = 0; g < G.order(); ++g)
        for (Elem hh : h.members())
          if (k.contains(G.sub(g, hh))) {
            dmap[g] = base_sub.position[hh];
            break;
          }
      ElemSet dcone_image;
      for (Elem p : total.cone.members()) dcone_image.add(dmap[p]);
      ElemSet e_pre;
      for (int i = 0; i < base_sub.group.order(); ++i)
        if (total.cone.contains(base_sub.embed[i])) e_pre.add(i);
      for (ElemSet bc : base_sub.group.submonoids()) {
        if (!dcone_image.subset_of(bc) || !bc.subset_of(e_pre)) continue;
        FiniteRpoGroup base{base_sub.group, bc};
        out.push_back({total, base, RpoMorphism(total, base, dmap),
                       RpoMorphism(base, total, base_sub.embed)});
      }
    }
  }
  return out;
}

}  // namespace rpog
