#pragma once

#include <optional>
#include <vector>

#include "rpog/fingroup.hpp"

namespace rpog {

// Checks the group laws and the cone-submonoid laws exhaustively.  The
// witness names the first violated law in lexicographic element order.
Verdict validate(const FiniteRpoGroup& g);

// Whether the cone is closed under conjugation by arbitrary elements,
// i.e. the preorder is two-sided.
Verdict is_preordered(const FiniteRpoGroup& g);

// Group homomorphism plus monotonicity, both exhaustive.
Verdict check_morphism(const RpoMorphism& f);

struct KernelResult {
  FiniteRpoGroup object;   // kernel subgroup with intersected cone
  RpoMorphism inclusion;   // object -> f.dom
};
KernelResult kernel(const RpoMorphism& f);

// An injective morphism is a normal monomorphism iff its image is a
// normal subgroup of the codomain and the mapped cone equals
// image-intersect-codomain-cone (it is then a kernel).
Verdict is_normal_mono(const RpoMorphism& f);

// All submonoids of a finite group, each once, sorted by (size, mask).
// In a finite group these coincide with the subgroups.
std::vector<Cone> enumerate_cones(const FiniteGroup& g);

std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& g);
std::vector<std::vector<Elem>> monotone_automorphisms(const FiniteRpoGroup& g);

// Every group homomorphism dom -> cod, enumerated deterministically by
// generator images.
std::vector<std::vector<Elem>> group_homs(const FiniteGroup& dom,
                                          const FiniteGroup& cod);
std::vector<RpoMorphism> monotone_morphisms(const FiniteRpoGroup& dom,
                                            const FiniteRpoGroup& cod);

bool is_group_hom(const FiniteGroup& dom, const FiniteGroup& cod,
                  const std::vector<Elem>& map);

std::optional<std::vector<Elem>> find_group_iso(const FiniteGroup& a,
                                                const FiniteGroup& b);
// Cone-preserving group isomorphism (monotone with monotone inverse).
std::optional<std::vector<Elem>> find_rpo_iso(const FiniteRpoGroup& a,
                                              const FiniteRpoGroup& b);
bool rpo_isomorphic(const FiniteRpoGroup& a, const FiniteRpoGroup& b);

}  // namespace rpog
