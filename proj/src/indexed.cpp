#include "rpog/indexed.hpp"

namespace rpog {

namespace {

// Worklist closure: when an element is processed it multiplies with
// everything known at that moment; pairs with later arrivals are handled
// when the later element is processed.  Each ordered pair is touched a
// bounded number of times.
void close_over(const IndexedGroup& g, std::vector<char>& in,
                std::vector<int>& known, size_t& processed) {
  while (processed < known.size()) {
    int f = known[processed++];
    for (size_t i = 0; i < known.size(); ++i) {
      int k = known[i];
      for (int prod : {g.op(f, k), g.op(k, f)})
        if (!in[prod]) {
          in[prod] = 1;
          known.push_back(prod);
        }
    }
  }
}

}  // namespace

std::vector<int> generating_sequence(const IndexedGroup& g) {
  std::vector<char> in(g.n, 0);
  std::vector<int> known = {0};
  in[0] = 1;
  size_t processed = 0;
  close_over(g, in, known, processed);
  std::vector<int> gens;
  for (int x = 0; x < g.n; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    in[x] = 1;
    known.push_back(x);
    close_over(g, in, known, processed);
  }
  return gens;
}

std::optional<std::pair<int, int>> hom_violation(
    const IndexedGroup& dom, const std::vector<int>& gens,
    const std::function<int(int)>& f,
    const std::function<int(int, int)>& cod_op, int cod_id) {
  if (f(0) != cod_id) return std::pair{0, 0};
  for (int g : gens)
    for (int x = 0; x < dom.n; ++x)
      if (f(dom.op(g, x)) != cod_op(f(g), f(x))) return std::pair{g, x};
  return std::nullopt;
}

std::optional<std::pair<int, int>> hom_violation(
    const IndexedGroup& dom, const std::function<int(int)>& f,
    const std::function<int(int, int)>& cod_op, int cod_id) {
  return hom_violation(dom, generating_sequence(dom), f, cod_op, cod_id);
}

}  // namespace rpog
