#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace rpog {

// A group presented as indices 0..n-1 with an operation callback and
// identity 0.  Used for derived carriers (pullbacks, triple relations)
// that can exceed the mask-based order cap.
struct IndexedGroup {
  int n = 0;
  std::function<int(int, int)> op;
};

std::vector<int> generating_sequence(const IndexedGroup& g);

// First pair violating f(u+v) = f(u) * f(v), or nullopt if f is a
// homomorphism.  Tests f(0)=0 and the pairs (g, x) for g in a generating
// sequence and all x, which suffices for the full law.
std::optional<std::pair<int, int>> hom_violation(
    const IndexedGroup& dom, const std::function<int(int)>& f,
    const std::function<int(int, int)>& cod_op, int cod_id = 0);

// Same, with a caller-supplied generating sequence.
std::optional<std::pair<int, int>> hom_violation(
    const IndexedGroup& dom, const std::vector<int>& gens,
    const std::function<int(int)>& f,
    const std::function<int(int, int)>& cod_op, int cod_id = 0);

}  // namespace rpog
