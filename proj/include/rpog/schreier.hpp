#pragma once

#include <optional>
#include <vector>

#include "rpog/finite_core.hpp"
#include "rpog/fingroup.hpp"
#include "rpog/subobjects.hpp"

namespace rpog {

// A split epimorphism d with chosen section e, d o e = id.
struct SplitPoint {
  FiniteRpoGroup total;
  FiniteRpoGroup base;
  RpoMorphism d;  // total -> base
  RpoMorphism e;  // base -> total

  void check() const;  // structural/precondition validation
};

// For every positive a of the total object, a - ed(a) stays positive.
Verdict is_schreier(const SplitPoint& p);

// A base object acting on a target by automorphisms: act must be a group
// homomorphism into Aut(target) sending positive elements to monotone
// automorphisms.
struct ActionMorphism {
  FiniteRpoGroup base;
  FiniteRpoGroup target;
  std::vector<std::vector<Elem>> act;  // act[x] : permutation of target

  Verdict check() const;
};

// Aut(G) as a composition-table group (identity automorphism first) with
// the monotone automorphisms as its cone.  Requires |Aut(G)| to fit the
// order cap; action enumeration below does not go through this table.
struct AutRpo {
  FiniteRpoGroup rpo;
  std::vector<std::vector<Elem>> auts;  // auts[i] : permutation of G

  int index_of(const std::vector<Elem>& f) const;  // -1 when absent
};
AutRpo aut_rpo(const FiniteRpoGroup& g);

// Every group homomorphism base -> Aut(target), as raw tables of
// automorphisms indexed by base elements.
std::vector<std::vector<std::vector<Elem>>> action_tables(
    const FiniteGroup& base, const FiniteGroup& target);

// The actions that are monotone morphisms into <target>_S.
std::vector<ActionMorphism> monotone_actions(const FiniteRpoGroup& base,
                                             const FiniteRpoGroup& target);

// Semidirect product with the product cone; d = second projection,
// e = second injection.  The first injection is exposed alongside.
struct SemidirectPoint {
  SplitPoint point;
  RpoMorphism i0;  // target -> total
  RpoMorphism i1;  // base -> total (equals point.e)
  // element (k, x) of the total object at index k * base.order() + x
};
SemidirectPoint semidirect(const ActionMorphism& mu);

// Kernel, recovered action, and cone transport along x |-> (x-ed(x), d(x)).
struct PointClassification {
  FiniteRpoGroup kernel;     // ker d with its intersected cone
  ActionMorphism recovered;  // conjugation action of the base on the kernel
  ElemSet transported_cone;  // on kernel.order() x base.order() indices
  ElemSet prod_cone;         // kernel cone x base cone
  ElemSet lex_cone;
  bool prod_below;  // prod_cone subset of transported_cone
  bool below_lex;   // transported_cone subset of lex_cone
  bool is_prod;     // transported_cone == prod_cone
};
PointClassification classify_point(const SplitPoint& p);

// Pullback of a point along f : (Y,Q) -> base, computed componentwise.
SplitPoint pullback_point(const SplitPoint& p, const RpoMorphism& f);

// Split extensions with kernel x and codomain y: the count of classes
// obtained from monotone actions of y on x must equal the count found by
// brute force over group actions and candidate cones, with the canonical
// assignment a bijection.
struct ActionRepReport {
  Verdict verdict;
  int morphism_count = 0;
  int extension_count = 0;
};
ActionRepReport check_action_rep(const FiniteRpoGroup& x,
                                 const FiniteRpoGroup& y,
                                 int size_guard = 64);

// Kernel of the conjugation action; defined when the cone is a group
// (always, for a finite valid input).
NormalSubobject s_center(const FiniteRpoGroup& g);

// All split points with the given total object: one per
// (normal kernel, complement, base cone) triple, base presented on the
// complement subgroup.
std::vector<SplitPoint> enumerate_split_points(const FiniteRpoGroup& total);

}  // namespace rpog
