#include "rpog/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace rpog::catalog {

namespace {

// One-line permutation of {0..k-1}; composition is (a*b)(x) = a(b(x)).
using Perm = std::vector<int>;

Perm pcompose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

int moved_points(const Perm& p) {
  int m = 0;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) ++m;
  return m;
}

// Cycle notation with 1-based points: "(12)(34)", identity "id".
std::string cycle_name(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    int j = static_cast<int>(i);
    do {
      seen[j] = true;
      out += std::to_string(j + 1);
      j = p[j];
    } while (j != static_cast<int>(i));
    out += ")";
  }
  return out.empty() ? "id" : out;
}

FiniteGroup from_perms(std::string name, std::vector<Perm> perms) {
  // Identity first, then by (number of moved points, cycle notation):
  // the textbook listing id, (12), (13), (14), (23), ...
  std::ranges::sort(perms, [](const Perm& a, const Perm& b) {
    return std::tuple(moved_points(a), cycle_name(a)) <
           std::tuple(moved_points(b), cycle_name(b));
  });
  int n = static_cast<int>(perms.size());
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = cycle_name(perms[i]);
  auto index_of = [&](const Perm& p) {
    return static_cast<Elem>(std::ranges::find(perms, p) - perms.begin());
  };
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = index_of(pcompose(perms[i], perms[j]));
  return FiniteGroup(std::move(name), std::move(table), std::move(names));
}

std::vector<Perm> all_perms(int k) {
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_even(const Perm& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace

FiniteGroup trivial() { return cyclic(1); }

FiniteGroup cyclic(int n) {
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return FiniteGroup("C" + std::to_string(n), std::move(table));
}

FiniteGroup klein4() {
  FiniteGroup g = direct_product(cyclic(2), cyclic(2));
  g.set_name("C2xC2");
  return g;
}

FiniteGroup dihedral(int n) {
  // Elements s^a r^i with s r s = r^-1; index a*n + i.
  int order = 2 * n;
  auto idx = [&](int a, int i) { return a * n + ((i % n) + n) % n; };
  std::vector<std::vector<Elem>> table(order, std::vector<Elem>(order));
  std::vector<std::string> names(order);
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < n; ++i) {
      std::string nm = a ? "s" : "";
      if (i == 1) nm += "r";
      else if (i > 1) nm += "r" + std::to_string(i);
      names[idx(a, i)] = nm.empty() ? "e" : nm;
      for (int b = 0; b < 2; ++b)
        for (int j = 0; j < n; ++j)
          table[idx(a, i)][idx(b, j)] = idx((a + b) % 2, (b ? -i : i) + j);
    }
  return FiniteGroup("D" + std::to_string(n), std::move(table),
                     std::move(names));
}

FiniteGroup quaternion8() {
  // 0..7 = 1, -1, i, -i, j, -j, k, -k
  const std::vector<std::string> names = {"1", "-1", "i", "-i",
                                          "j", "-j", "k", "-k"};
  // unit products: u*v = (sign, unit) over units 0=1,1=i,2=j,3=k
  static const int unit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto idx = [](int u, int s) { return 2 * u + (s < 0 ? 1 : 0); };
  std::vector<std::vector<Elem>> table(8, std::vector<Elem>(8));
  for (int u = 0; u < 4; ++u)
    for (int su : {1, -1})
      for (int v = 0; v < 4; ++v)
        for (int sv : {1, -1})
          table[idx(u, su)][idx(v, sv)] =
              idx(unit[u][v], su * sv * sign[u][v]);
  return FiniteGroup("Q8", std::move(table), names);
}

FiniteGroup dicyclic3() {
  // <a,b | a^6 = e, b^2 = a^3, b a b^-1 = a^-1>; elements a^i b^e.
  auto idx = [](int i, int e) { return e * 6 + ((i % 6) + 6) % 6; };
  std::vector<std::vector<Elem>> table(12, std::vector<Elem>(12));
  std::vector<std::string> names(12);
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < 6; ++i) {
      std::string nm;
      if (i == 1) nm = "a";
      else if (i > 1) nm = "a" + std::to_string(i);
      if (e) nm += "b";
      names[idx(i, e)] = nm.empty() ? "e" : nm;
      for (int f = 0; f < 2; ++f)
        for (int j = 0; j < 6; ++j) {
          int k = i + (e ? -j : j);  // a^i b^e a^j b^f = a^(i +- j) b^(e+f)
          int ef = e + f;
          if (ef == 2) k += 3;       // b^2 = a^3
          table[idx(i, e)][idx(j, f)] = idx(k, ef % 2);
        }
    }
  return FiniteGroup("Dic3", std::move(table), std::move(names));
}

FiniteGroup symmetric(int n) {
  return from_perms("S" + std::to_string(n), all_perms(n));
}

FiniteGroup alternating4() {
  std::vector<Perm> evens;
  for (const Perm& p : all_perms(4))
    if (is_even(p)) evens.push_back(p);
  return from_perms("A4", std::move(evens));
}

ElemSet even_permutations(int n) {
  FiniteGroup s = symmetric(n);
  // recover each element's permutation from its action on cosets is
  // overkill; regenerate and match by name instead
  std::vector<Perm> perms = all_perms(n);
  ElemSet out;
  for (const Perm& p : perms)
    if (is_even(p)) out.add(*element_by_name(s, cycle_name(p)));
  return out;
}

std::vector<FiniteGroup> groups_upto(int n) {
  std::vector<FiniteGroup> out;
  auto put = [&](FiniteGroup g) {
    if (g.order() <= n) out.push_back(std::move(g));
  };
  for (int k = 1; k <= std::min(n, 12); ++k) put(cyclic(k));
  put(klein4());
  if (n >= 6) put(symmetric(3));
  if (n >= 8) {
    FiniteGroup c4xc2 = direct_product(cyclic(4), cyclic(2));
    c4xc2.set_name("C4xC2");
    put(std::move(c4xc2));
    FiniteGroup c2cube = direct_product(klein4(), cyclic(2));
    c2cube.set_name("C2xC2xC2");
    put(std::move(c2cube));
    put(dihedral(4));
    put(quaternion8());
  }
  if (n >= 9) {
    FiniteGroup c3xc3 = direct_product(cyclic(3), cyclic(3));
    c3xc3.set_name("C3xC3");
    put(std::move(c3xc3));
  }
  if (n >= 10) put(dihedral(5));
  if (n >= 12) {
    FiniteGroup c6xc2 = direct_product(cyclic(6), cyclic(2));
    c6xc2.set_name("C6xC2");
    put(std::move(c6xc2));
    put(dihedral(6));
    put(alternating4());
    put(dicyclic3());
  }
  std::ranges::stable_sort(
      out, [](const FiniteGroup& a, const FiniteGroup& b) {
        return a.order() < b.order();
      });
  return out;
}

std::optional<FiniteGroup> group_by_name(const std::string& name) {
  for (FiniteGroup& g : groups_upto(12))
    if (g.name() == name) return std::move(g);
  if (name == "S4") return symmetric(4);
  if (name == "C1" || name == "trivial") return trivial();
  return std::nullopt;
}

std::optional<FiniteRpoGroup> rpo_by_name(const std::string& name) {
  if (name == "S4_A4")
    return FiniteRpoGroup{symmetric(4), even_permutations(4)};
  if (name == "S4_P2") {
    FiniteGroup s4 = symmetric(4);
    Cone p;
    p.add(0);
    p.add(*element_by_name(s4, "(12)(34)"));
    return FiniteRpoGroup{std::move(s4), p};
  }
  auto pos = name.rfind('_');
  if (pos != std::string::npos) {
    std::string base = name.substr(0, pos), suffix = name.substr(pos + 1);
    if (auto g = group_by_name(base)) {
      if (suffix == "full")
        return FiniteRpoGroup{*g, g->full_set()};
      if (suffix == "triv")
        return FiniteRpoGroup{*g, ElemSet::single(0)};
    }
  }
  return std::nullopt;
}

std::vector<std::string> rpo_names() {
  std::vector<std::string> out = {"S4_A4", "S4_P2"};
  for (const FiniteGroup& g : groups_upto(12)) {
    out.push_back(g.name() + "_full");
    out.push_back(g.name() + "_triv");
  }
  out.push_back("S4_full");
  out.push_back("S4_triv");
  return out;
}

}  // namespace rpog::catalog
