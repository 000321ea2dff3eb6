#include "rpog/sigma.hpp"

#include <algorithm>
#include <functional>

#include "rpog/finite_core.hpp"

namespace rpog {

namespace {

Binding mbind(const SigmaAlgebra& m, std::string name, Elem a) {
  return {std::move(name),
          m.names.empty() ? std::to_string(a) : m.names[a], a};
}

std::vector<Elem> sorted_unique(std::vector<Elem> xs) {
  std::ranges::sort(xs);
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool is_bijective(const std::vector<Elem>& map, int n) {
  std::vector<char> seen(n, 0);
  for (Elem x : map) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return static_cast<int>(map.size()) == n;
}

}  // namespace

void SigmaAlgebra::check_shape() const {
  if (n <= 0) throw structural_error("sigma algebra with empty carrier");
  auto check_unary = [&](const std::vector<Elem>& f, const char* what) {
    if (static_cast<int>(f.size()) != n)
      throw structural_error(std::string(what) + " has the wrong length");
    for (Elem x : f)
      if (x < 0 || x >= n)
        throw structural_error(std::string(what) +
                               " has an out-of-range entry");
  };
  if (zero < 0 || zero >= n) throw structural_error("zero out of range");
  if (static_cast<int>(plus.size()) != n)
    throw structural_error("plus table has the wrong height");
  for (const auto& row : plus) check_unary(row, "plus row");
  check_unary(neg, "neg");
  check_unary(proj0, "proj0");
  check_unary(proj1, "proj1");
  check_unary(inj, "inj");
  if (tri) check_unary(*tri, "tri");
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw structural_error("name list has the wrong length");
}

std::vector<Elem> SigmaAlgebra::proj0_image() const {
  return sorted_unique(proj0);
}
std::vector<Elem> SigmaAlgebra::proj1_image() const {
  return sorted_unique(proj1);
}

bool AxiomReport::all_hold() const {
  return std::ranges::all_of(axioms,
                             [](const auto& kv) { return kv.second.holds; });
}

const Verdict* AxiomReport::find(const std::string& axiom) const {
  for (const auto& [k, v] : axioms)
    if (k == axiom) return &v;
  return nullptr;
}

std::string AxiomReport::first_failure() const {
  for (const auto& [k, v] : axioms)
    if (!v.holds) return k;
  return "";
}

AxiomReport check_axioms(const SigmaAlgebra& m) {
  m.check_shape();
  const int n = m.n;
  const Elem z = m.zero;
  auto P = [&](Elem a, Elem b) { return m.plus[a][b]; };

  AxiomReport rep;
  auto push = [&](const char* k, Verdict v) {
    rep.axioms.emplace_back(k, std::move(v));
  };

  // (M): monoid laws plus p0, p1, i being monoid morphisms.
  {
    Verdict v = Verdict::yes("M");
    for (Elem a = 0; a < n && v.holds; ++a)
      if (P(z, a) != a || P(a, z) != a)
        v = Verdict::no("M", {mbind(m, "a", a)}, "identity law");
    for (Elem a = 0; a < n && v.holds; ++a)
      for (Elem b = 0; b < n && v.holds; ++b)
        for (Elem c = 0; c < n; ++c)
          if (P(P(a, b), c) != P(a, P(b, c))) {
            v = Verdict::no(
                "M", {mbind(m, "a", a), mbind(m, "b", b), mbind(m, "c", c)},
                "associativity");
            break;
          }
    struct Op {
      const char* nm;
      const std::vector<Elem>* f;
    };
    for (Op o : {Op{"p0", &m.proj0}, Op{"p1", &m.proj1}, Op{"i", &m.inj}}) {
      if (!v.holds) break;
      const auto& f = *o.f;
      if (f[z] != z)
        v = Verdict::no("M", {}, std::string(o.nm) + " does not preserve 0");
      for (Elem a = 0; a < n && v.holds; ++a)
        for (Elem b = 0; b < n; ++b)
          if (f[P(a, b)] != P(f[a], f[b])) {
            v = Verdict::no("M", {mbind(m, "a", a), mbind(m, "b", b)},
                            std::string(o.nm) + " is not a monoid morphism");
            break;
          }
    }
    push("M", std::move(v));
  }
  {
    Verdict v = Verdict::yes("P1");
    for (Elem a = 0; a < n; ++a)
      if (P(m.proj0[a], m.proj1[a]) != a || P(m.proj1[a], m.proj0[a]) != a) {
        v = Verdict::no("P1", {mbind(m, "a", a)});
        break;
      }
    push("P1", std::move(v));
  }
  {
    Verdict v = Verdict::yes("P2");
    for (Elem a = 0; a < n; ++a)
      if (m.neg[m.proj1[a]] != z || m.proj1[m.inj[a]] != z ||
          m.proj0[m.proj1[a]] != z || m.proj1[m.proj0[a]] != z) {
        v = Verdict::no("P2", {mbind(m, "a", a)});
        break;
      }
    push("P2", std::move(v));
  }
  {
    Verdict v = Verdict::yes("P3");
    for (Elem a = 0; a < n; ++a)
      if (m.inj[m.proj1[a]] != m.proj0[m.inj[a]]) {
        v = Verdict::no("P3", {mbind(m, "a", a)});
        break;
      }
    push("P3", std::move(v));
  }
  {
    Verdict v = Verdict::yes("G");
    for (Elem a = 0; a < n; ++a)
      if (P(a, m.neg[a]) != m.proj1[a] || P(m.neg[a], a) != m.proj1[a]) {
        v = Verdict::no("G", {mbind(m, "a", a)});
        break;
      }
    push("G", std::move(v));
  }
  // (Inj): material implication over all pairs.
  {
    Verdict v = Verdict::yes("Inj");
    for (Elem a = 0; a < n && v.holds; ++a)
      for (Elem b = 0; b < n; ++b)
        if (m.inj[a] == m.inj[b] && m.proj1[a] != m.proj1[b]) {
          v = Verdict::no("Inj", {mbind(m, "a", a), mbind(m, "b", b)});
          break;
        }
    push("Inj", std::move(v));
  }
  if (m.tri) {
    const auto& t = *m.tri;
    {
      Verdict v = Verdict::yes("C1");
      for (Elem a = 0; a < n; ++a) {
        Elem rhs = P(P(m.proj0[a], m.inj[m.proj1[a]]), m.neg[m.proj0[a]]);
        if (m.inj[t[a]] != rhs) {
          v = Verdict::no("C1", {mbind(m, "a", a)});
          break;
        }
      }
      push("C1", std::move(v));
    }
    {
      Verdict v = Verdict::yes("C2");
      for (Elem a = 0; a < n; ++a)
        if (m.proj0[t[a]] != z) {
          v = Verdict::no("C2", {mbind(m, "a", a)});
          break;
        }
      push("C2", std::move(v));
    }
  }
  return rep;
}

SigmaAlgebra to_model(const FiniteRpoGroup& g) {
  if (!validate(g))
    throw precondition_error(
        "to_model: input is not a right-preordered group");
  const FiniteGroup& G = g.group;
  std::vector<Elem> cone = g.cone.members();  // ascending; cone[0] == 0
  const int k = static_cast<int>(cone.size());
  std::vector<Elem> pos(G.order(), -1);
  for (int i = 0; i < k; ++i) pos[cone[i]] = i;
  const int n = G.order() * k;
  auto idx = [&](Elem a, int pi) { return a * k + pi; };

  SigmaAlgebra m;
  m.n = n;
  m.zero = idx(0, 0);
  m.plus.assign(n, std::vector<Elem>(n));
  m.neg.resize(n);
  m.proj0.resize(n);
  m.proj1.resize(n);
  m.inj.resize(n);
  m.names.resize(n);
  for (Elem a = 0; a < G.order(); ++a)
    for (int p = 0; p < k; ++p) {
      Elem x = idx(a, p);
      m.names[x] =
          "(" + G.element_name(a) + "," + G.element_name(cone[p]) + ")";
      m.neg[x] = idx(G.inv(a), 0);
      m.proj0[x] = idx(a, 0);
      m.proj1[x] = idx(0, p);
      m.inj[x] = idx(cone[p], 0);
      for (Elem b = 0; b < G.order(); ++b)
        for (int q = 0; q < k; ++q)
          m.plus[x][idx(b, q)] = idx(G.op(a, b), pos[G.op(cone[p], cone[q])]);
    }
  return m;
}

FiniteRpoGroup from_model(const SigmaAlgebra& m) {
  AxiomReport rep = check_axioms(m);
  if (!rep.all_hold())
    throw precondition_error("from_model: axiom " + rep.first_failure() +
                             " fails on the input model");
  std::vector<Elem> carrier = m.proj0_image();
  if (auto it = std::ranges::find(carrier, m.zero); it != carrier.end())
    std::iter_swap(carrier.begin(), it);
  const int n = static_cast<int>(carrier.size());
  if (n > kMaxOrder)
    throw structural_error("group part of the model is too large");
  std::vector<Elem> position(m.n, -1);
  for (int i = 0; i < n; ++i) position[carrier[i]] = i;

  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = position[m.plus[carrier[i]][carrier[j]]];
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i)
    names[i] =
        m.names.empty() ? std::to_string(carrier[i]) : m.names[carrier[i]];
  FiniteGroup grp("G(model)", std::move(table), std::move(names));

  Cone cone;
  for (Elem y : m.proj1_image()) cone.add(position[m.inj[y]]);
  return {std::move(grp), cone};
}

ExtendResult extend_to_pog(const SigmaAlgebra& m) {
  AxiomReport rep = check_axioms(m);
  if (!rep.all_hold())
    throw precondition_error("extend_to_pog: axiom " + rep.first_failure() +
                             " fails on the input model");
  SigmaAlgebra mm = m;
  std::vector<Elem> tri(mm.n, -1);
  for (Elem a = 0; a < mm.n; ++a) {
    Elem target =
        mm.plus[mm.plus[mm.proj0[a]][mm.inj[mm.proj1[a]]]][mm.neg[mm.proj0[a]]];
    Elem found = -1;
    for (Elem y = 0; y < mm.n; ++y)
      if (mm.proj1[y] == y && mm.inj[y] == target) {
        found = y;
        break;
      }
    if (found < 0)
      return {std::nullopt,
              Verdict::no("conjugation-closure",
                          {mbind(mm, "a", a), mbind(mm, "a0+i(a1)-a0", target)},
                          "no cone element realizes the conjugated value")};
    tri[a] = found;
  }
  mm.tri = std::move(tri);
  AxiomReport extended = check_axioms(mm);
  if (!extended.all_hold())
    return {std::nullopt,
            Verdict::no(extended.first_failure(), {},
                        "extension candidate fails an axiom")};
  return {std::move(mm), Verdict::yes("preordered extension")};
}

std::optional<std::vector<Elem>> roundtrip_group_iso(const FiniteRpoGroup& g) {
  SigmaAlgebra m = to_model(g);
  FiniteRpoGroup h = from_model(m);
  if (h.order() != g.order()) return std::nullopt;
  // a  |->  position of the model element (a, 0)
  const int k = g.cone.size();
  std::vector<Elem> carrier = m.proj0_image();
  if (auto it = std::ranges::find(carrier, m.zero); it != carrier.end())
    std::iter_swap(carrier.begin(), it);
  std::vector<Elem> position(m.n, -1);
  for (int i = 0; i < static_cast<int>(carrier.size()); ++i)
    position[carrier[i]] = i;
  std::vector<Elem> map(g.order());
  for (Elem a = 0; a < g.order(); ++a) map[a] = position[a * k];

  if (!is_bijective(map, g.order())) return std::nullopt;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (map[g.group.op(a, b)] != h.group.op(map[a], map[b]))
        return std::nullopt;
  ElemSet mapped;
  for (Elem p : g.cone.members()) mapped.add(map[p]);
  if (mapped != h.cone) return std::nullopt;
  return map;
}

std::optional<std::vector<Elem>> roundtrip_model_iso(const SigmaAlgebra& m) {
  if (!check_axioms(m).all_hold()) return std::nullopt;
  FiniteRpoGroup g = from_model(m);
  SigmaAlgebra m2 = to_model(g);
  if (m2.n != m.n) return std::nullopt;

  // m2's carrier is (group element, cone element) over from_model(m); both
  // coordinates name carrier elements of m.  The canonical map adds the
  // group part to the p1-preimage of the cone part.
  std::vector<Elem> carrier = m.proj0_image();
  if (auto it = std::ranges::find(carrier, m.zero); it != carrier.end())
    std::iter_swap(carrier.begin(), it);
  std::vector<Elem> cone_members = g.cone.members();  // indices into carrier
  const int k = static_cast<int>(cone_members.size());
  std::vector<Elem> p1_image = m.proj1_image();

  auto preimage = [&](Elem embedded) -> Elem {
    for (Elem y : p1_image)
      if (m.inj[y] == embedded) return y;
    return -1;
  };

  std::vector<Elem> map(m2.n, -1);
  for (int i = 0; i < static_cast<int>(carrier.size()); ++i)
    for (int p = 0; p < k; ++p) {
      Elem w = carrier[cone_members[p]];
      Elem y = preimage(w);
      if (y < 0) return std::nullopt;
      map[i * k + p] = m.plus[carrier[i]][y];
    }

  if (!is_bijective(map, m.n)) return std::nullopt;
  if (map[m2.zero] != m.zero) return std::nullopt;
  for (Elem a = 0; a < m2.n; ++a) {
    if (map[m2.neg[a]] != m.neg[map[a]]) return std::nullopt;
    if (map[m2.proj0[a]] != m.proj0[map[a]]) return std::nullopt;
    if (map[m2.proj1[a]] != m.proj1[map[a]]) return std::nullopt;
    if (map[m2.inj[a]] != m.inj[map[a]]) return std::nullopt;
    for (Elem b = 0; b < m2.n; ++b)
      if (map[m2.plus[a][b]] != m.plus[map[a]][map[b]]) return std::nullopt;
  }
  return map;
}

std::optional<std::vector<Elem>> find_sigma_iso(const SigmaAlgebra& a,
                                                const SigmaAlgebra& b) {
  if (a.n != b.n) return std::nullopt;
  if (a.tri.has_value() != b.tri.has_value()) return std::nullopt;
  const int n = a.n;

  // generating sequence under all operations
  std::vector<char> have(n, 0);
  auto close = [&]() {
    have[a.zero] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (Elem x = 0; x < n; ++x) {
        if (!have[x]) continue;
        auto touch = [&](Elem t) {
          if (!have[t]) {
            have[t] = 1;
            changed = true;
          }
        };
        touch(a.neg[x]);
        touch(a.proj0[x]);
        touch(a.proj1[x]);
        touch(a.inj[x]);
        if (a.tri) touch((*a.tri)[x]);
        for (Elem y = 0; y < n; ++y)
          if (have[y]) {
            touch(a.plus[x][y]);
            touch(a.plus[y][x]);
          }
      }
    }
  };
  std::vector<Elem> gens;
  close();
  for (;;) {
    Elem g = -1;
    for (Elem x = 0; x < n; ++x)
      if (!have[x]) {
        g = x;
        break;
      }
    if (g < 0) break;
    gens.push_back(g);
    have[g] = 1;
    close();
  }

  std::vector<Elem> map(n, -1);
  map[a.zero] = b.zero;
  std::optional<std::vector<Elem>> result;
  std::function<void(size_t)> dfs = [&](size_t gi) {
    if (result) return;
    if (gi == gens.size()) {
      for (Elem x = 0; x < n; ++x)
        if (map[x] < 0) return;
      if (!is_bijective(map, n)) return;
      result = map;
      return;
    }
    for (Elem img = 0; img < n && !result; ++img) {
      std::vector<Elem> saved = map;
      map[gens[gi]] = img;
      bool ok = true, changed = true;
      auto want = [&](Elem src, Elem dst) {
        if (!ok) return;
        if (map[src] < 0) {
          map[src] = dst;
          changed = true;
        } else if (map[src] != dst) {
          ok = false;
        }
      };
      while (changed && ok) {
        changed = false;
        for (Elem x = 0; x < n && ok; ++x) {
          if (map[x] < 0) continue;
          want(a.neg[x], b.neg[map[x]]);
          want(a.proj0[x], b.proj0[map[x]]);
          want(a.proj1[x], b.proj1[map[x]]);
          want(a.inj[x], b.inj[map[x]]);
          if (a.tri) want((*a.tri)[x], (*b.tri)[map[x]]);
          for (Elem y = 0; y < n && ok; ++y)
            if (map[y] >= 0) want(a.plus[x][y], b.plus[map[x]][map[y]]);
        }
      }
      if (ok) dfs(gi + 1);
      map = std::move(saved);
    }
  };
  dfs(0);
  return result;
}

}  // namespace rpog
