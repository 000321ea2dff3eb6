#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rpog/fingroup.hpp"

namespace rpog::catalog {

FiniteGroup trivial();
FiniteGroup cyclic(int n);
FiniteGroup klein4();
FiniteGroup dihedral(int n);  // order 2n, n >= 3
FiniteGroup quaternion8();
FiniteGroup dicyclic3();      // order 12
FiniteGroup symmetric(int n); // n <= 4, elements named in cycle notation
FiniteGroup alternating4();

// Every group of order <= n (n <= 12), one per isomorphism class.
std::vector<FiniteGroup> groups_upto(int n);

std::optional<FiniteGroup> group_by_name(const std::string& name);

// Named right-preordered groups usable in input files and on the command
// line: "<group>_full", "<group>_triv" for every catalog group, plus
// "S4_A4" and "S4_P2" (cone {id,(12)(34)}).
std::optional<FiniteRpoGroup> rpo_by_name(const std::string& name);
std::vector<std::string> rpo_names();

// Mask of the even permutations inside symmetric(n).
ElemSet even_permutations(int n);

}  // namespace rpog::catalog
