#pragma once

#include <set>
#include <utility>
#include <vector>

#include "rpog/finite_core.hpp"
#include "rpog/fingroup.hpp"

namespace rpog {

// A normal subgroup of a carrier together with its forced cone
// (always subgroup intersect carrier cone, never independent data).
struct NormalSubobject {
  ElemSet subgroup;
  ElemSet cone;

  friend bool operator==(const NormalSubobject&,
                         const NormalSubobject&) = default;
};

// Abstract finite lattice, also usable for hand-built fixtures.
struct FiniteLattice {
  int n = 0;
  std::vector<std::vector<int>> join, meet;
};

struct NormalLattice {
  FiniteRpoGroup carrier;
  std::vector<NormalSubobject> elements;  // sorted by (size, mask)
  std::vector<std::vector<int>> join, meet;

  FiniteLattice to_lattice() const { return {int(elements.size()), join, meet}; }
  int index_of(ElemSet subgroup) const;  // -1 when absent
};

NormalLattice normal_lattice(const FiniteRpoGroup& g);

// The modular identity (a^b)v(c^b) = ((a^b)vc)^b over all triples.
Verdict check_modular(const FiniteLattice& l);

// N |-> (N, N n P) is a join- and meet-preserving bijection onto the
// lattice of plain normal subgroups.
Verdict check_lattice_iso(const FiniteRpoGroup& g);

// An effective equivalence relation: cosets of a normal subgroup plus
// the derived set of related cone pairs.
struct EffEqRelation {
  FiniteRpoGroup carrier;
  std::vector<int> class_of;  // element -> class id
  ElemSet normal_subgroup;    // the class of 0
  std::set<std::pair<Elem, Elem>> cone_pairs;

  bool related(Elem a, Elem b) const { return class_of[a] == class_of[b]; }

  static EffEqRelation from_normal(const FiniteRpoGroup& carrier,
                                   ElemSet normal);
  // Validates that the classes are the cosets of a normal subgroup;
  // cone pairs are recomputed, never taken from input.
  static EffEqRelation from_partition(
      const FiniteRpoGroup& carrier,
      const std::vector<std::vector<Elem>>& classes);
  static EffEqRelation discrete(const FiniteRpoGroup& carrier);
  static EffEqRelation indiscrete(const FiniteRpoGroup& carrier);
};

EffEqRelation eff_rel_of(const RpoMorphism& f);

// Plain relational composition, on group pairs and cone pairs separately.
struct PairRelation {
  std::set<std::pair<Elem, Elem>> group_pairs;
  std::set<std::pair<Elem, Elem>> cone_pairs;
};
PairRelation rel_compose(const EffEqRelation& r, const EffEqRelation& s);
Verdict permutes(const EffEqRelation& r, const EffEqRelation& s);

// Kernel of the first projection: the class of 0 with its cone pairs.
NormalSubobject normalization(const EffEqRelation& r);

// Elementwise commutation of two subobjects; the connecting map
// (a,b) |-> a+b is then automatically monotone.
Verdict huq_commute(const FiniteRpoGroup& carrier, const NormalSubobject& x,
                    const NormalSubobject& y);

// Candidate connector p(a,b,c) = a-b+c on the pullback of the two
// relations: verdict on it being a homomorphism that maps the pullback
// cone into the carrier cone.
Verdict smith_commute(const EffEqRelation& r, const EffEqRelation& s);

// Both projection points of the relation are Schreier.
bool is_s_effective(const EffEqRelation& r);

}  // namespace rpog
