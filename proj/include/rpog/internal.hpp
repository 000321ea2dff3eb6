#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rpog/schreier.hpp"

namespace rpog {

// A parallel pair d, c split by a common section e.
struct ReflexiveGraph {
  FiniteRpoGroup apex;  // (X1, P1)
  FiniteRpoGroup base;  // (X0, P0)
  RpoMorphism d, c;     // apex -> base
  RpoMorphism e;        // base -> apex

  void check() const;
  SplitPoint point() const { return {apex, base, d, e}; }
};

// Boundary plus action with the equivariance axiom
// boundary(act(x)(a)) = x + boundary(a) - x.
struct PrecrossedModule {
  FiniteRpoGroup base;     // X0
  FiniteRpoGroup ker;      // X1
  RpoMorphism boundary;    // ker -> base
  ActionMorphism action;   // base acting on ker

  Verdict check() const;   // includes the equivariance axiom
};

// Composable pairs (a,b) with d(a) = c(b), indexed densely.
struct ComposablePairs {
  int apex_order = 0;
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<int> index;  // a * apex_order + b -> pair position, -1
  int find(Elem a, Elem b) const {
    return index[static_cast<size_t>(a) * apex_order + b];
  }
};
ComposablePairs composable_pairs(const ReflexiveGraph& g);

// The only possible composition map, m(a,b) = b - ec(b) + a, as a value
// per composable pair.  Makes no morphism claim.
std::vector<Elem> unique_m(const ReflexiveGraph& g);

// Holds iff unique_m is a group homomorphism on the pullback group and
// monotone for the componentwise pullback cone; the verdict pinpoints
// which of the two fails.
Verdict is_internal_category(const ReflexiveGraph& g);

// The only possible inversion, sigma(a) = ec(a) - a + ed(a).
std::vector<Elem> sigma_of(const ReflexiveGraph& g);

// Requires is_internal_category (precondition error otherwise); holds
// iff sigma is monotone.  That sigma is a group homomorphism is
// re-verified along the way.
Verdict is_groupoid(const ReflexiveGraph& g);

// Kernel of d with boundary c and the conjugation action through e.
// Requires the (d,e) point to be Schreier (precondition error carrying
// the witness otherwise).
PrecrossedModule graph_to_pxmod(const ReflexiveGraph& g);

// Apex the semidirect product with the product cone, d the projection,
// c = boundary on the kernel part plus the base part, e the injection.
ReflexiveGraph pxmod_to_graph(const PrecrossedModule& px);

// act(boundary(a))(b) = a + b - a for all a, b in the kernel object.
Verdict check_peiffer(const PrecrossedModule& px);

// The two sides must agree on every input; a false verdict signals an
// implementation bug, not a property of the input.
Verdict is_crossed_iff_category(const PrecrossedModule& px);

// Cone of the effective equivalence relation presented on
// dom(boundary) x cod(boundary) pairs, index a * cod_order + b:
// the pairs with b positive and boundary(a)+b positive.
ElemSet effective_relation_cone(const RpoMorphism& boundary);

// The equivalence-relation graph of an injective boundary with normal
// image, on the semidirect carrier, with the given apex cone.
ReflexiveGraph relation_graph(const RpoMorphism& boundary, ElemSet apex_cone);

// The graph must present an internal equivalence relation; holds iff its
// apex cone consists exactly of the elements with both legs positive,
// in which case the inversion map is verified monotone as well.
Verdict is_effective(const ReflexiveGraph& g);

struct InternalCategoryVerdict {
  Verdict is_schreier_graph;
  Verdict is_internal_category;
  std::optional<Verdict> is_groupoid;          // when the graph is a category
  std::optional<Verdict> kernel_cone_is_group; // when the graph is Schreier
  std::vector<Elem> m;      // per composable pair, when a category
  std::vector<Elem> sigma;  // when a groupoid
};
InternalCategoryVerdict full_verdict(const ReflexiveGraph& g);

// Exhaustive search for monotone morphisms on the pullback satisfying
// the category equations (boundary compatibility, units, associativity).
// Returns every solution; there is at most one.
std::vector<std::vector<Elem>> composition_morphism_search(
    const ReflexiveGraph& g);

}  // namespace rpog
