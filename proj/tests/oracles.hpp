#pragma once

// Independent oracles used by the tests.  Everything here recomputes
// expected values from first principles, without going through the
// library code paths under test.

#include <optional>
#include <string>
#include <vector>

#include "rpog/fingroup.hpp"

namespace rpog::oracle {

// Parse cycle notation with 1-based points ("(12)(34)", "id") into a
// one-line permutation of {0..k-1}.
inline std::vector<int> parse_cycles(const std::string& s, int k) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  if (s == "id") return p;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw std::runtime_error("bad cycle string " + s);
    ++i;
    std::vector<int> cycle;
    while (i < s.size() && s[i] != ')') {
      cycle.push_back(s[i] - '1');
      ++i;
    }
    ++i;  // ')'
    for (size_t j = 0; j < cycle.size(); ++j)
      p[cycle[j]] = cycle[(j + 1) % cycle.size()];
  }
  return p;
}

// Parity by inversion count.
inline bool is_even_permutation(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

// Parity of an element of a permutation group whose element names are
// cycle strings.
inline bool is_even_element(const FiniteGroup& g, Elem a, int points) {
  return is_even_permutation(parse_cycles(g.element_name(a), points));
}

// Every submonoid of a small group by direct scan over all subsets.
inline std::vector<ElemSet> submonoids_by_subsets(const FiniteGroup& g) {
  std::vector<ElemSet> out;
  const int n = g.order();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    ElemSet s{bits};
    if (!s.contains(0)) continue;
    bool closed = true;
    for (Elem a : s.members()) {
      for (Elem b : s.members())
        if (!s.contains(g.op(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

// All automorphisms by scanning every bijection (tiny orders only).
inline std::vector<std::vector<Elem>> automorphisms_by_scan(
    const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Elem> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<Elem>> out;
  do {
    if (perm[0] != 0) continue;
    bool hom = true;
    for (Elem a = 0; a < n && hom; ++a)
      for (Elem b = 0; b < n; ++b)
        if (perm[g.op(a, b)] != g.op(perm[a], perm[b])) {
          hom = false;
          break;
        }
    if (hom) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace rpog::oracle
