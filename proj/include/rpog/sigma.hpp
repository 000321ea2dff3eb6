#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rpog/fingroup.hpp"

namespace rpog {

// A model for the one-sorted signature (0, +, -, p0, p1, i) on a finite
// carrier, optionally extended by the unary operation tri.
struct SigmaAlgebra {
  int n = 0;
  Elem zero = 0;
  std::vector<std::vector<Elem>> plus;
  std::vector<Elem> neg, proj0, proj1, inj;
  std::optional<std::vector<Elem>> tri;
  std::vector<std::string> names;  // defaults to indices

  void check_shape() const;  // structural_error on malformed arrays
  std::vector<Elem> proj0_image() const;  // sorted, unique
  std::vector<Elem> proj1_image() const;
};

// Per-axiom verdicts, in the fixed order M, P1, P2, P3, G, Inj and, when
// tri is present, C1, C2.
struct AxiomReport {
  std::vector<std::pair<std::string, Verdict>> axioms;
  bool all_hold() const;
  const Verdict* find(const std::string& axiom) const;
  std::string first_failure() const;
};

// Evaluates every identity over all tuples; Inj (and the implication
// direction of nothing else) is checked as a material implication.
AxiomReport check_axioms(const SigmaAlgebra& m);

// Pair model on G x cone: the equivalence in one direction.
// Requires validate(g); throws precondition_error otherwise.
SigmaAlgebra to_model(const FiniteRpoGroup& g);

// The other direction: group on the p0-image, cone the inj-embedded
// p1-image.  Requires all axioms to hold; the error names the first
// failed axiom.
FiniteRpoGroup from_model(const SigmaAlgebra& m);

// Constructs the unique candidate tri and returns the extended model iff
// C1 and C2 then verify; the refusing verdict carries the element whose
// conjugation target leaves the cone.
struct ExtendResult {
  std::optional<SigmaAlgebra> model;
  Verdict verdict;
};
ExtendResult extend_to_pog(const SigmaAlgebra& m);

// Canonical round-trip maps, each verified to be an isomorphism of the
// appropriate kind (nullopt when verification fails).
std::optional<std::vector<Elem>> roundtrip_group_iso(const FiniteRpoGroup& g);
std::optional<std::vector<Elem>> roundtrip_model_iso(const SigmaAlgebra& m);

// Brute-force isomorphism-of-sigma-algebras search.
std::optional<std::vector<Elem>> find_sigma_iso(const SigmaAlgebra& a,
                                                const SigmaAlgebra& b);

}  // namespace rpog
