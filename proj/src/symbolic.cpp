#include "rpog/symbolic.hpp"

#include <algorithm>

namespace rpog {

std::string rat_text(const Rat& q) {
  std::string s = std::to_string(q.numerator());
  if (q.denominator() != 1) s += "/" + std::to_string(q.denominator());
  return s;
}

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw structural_error("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw structural_error("unparseable rational '" + s + "'");
  } catch (const std::out_of_range&) {
    throw structural_error("rational out of range '" + s + "'");
  }
}

Sym Sym::integer(long long v) {
  Sym s;
  s.kind_ = Kind::Int;
  s.q_ = Rat(v);
  return s;
}

Sym Sym::rational(Rat q) {
  Sym s;
  s.kind_ = Kind::Rat;
  s.q_ = std::move(q);
  return s;
}

Sym Sym::nonzero(Rat q) {
  if (q == Rat(0))
    throw structural_error("zero in a nonzero-rational position");
  Sym s;
  s.kind_ = Kind::NonzeroRat;
  s.q_ = std::move(q);
  return s;
}

Sym Sym::tuple(std::vector<Sym> items) {
  Sym s;
  s.kind_ = Kind::Tuple;
  s.items_ = std::move(items);
  return s;
}

std::string Sym::text() const {
  if (kind_ != Kind::Tuple) return rat_text(q_);
  std::string out = "(";
  for (size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ",";
    out += items_[i].text();
  }
  return out + ")";
}

bool operator==(const Sym& a, const Sym& b) {
  if (a.is_tuple() != b.is_tuple()) return false;
  if (!a.is_tuple()) return a.q_ == b.q_;
  return a.items_ == b.items_;
}

bool operator<(const Sym& a, const Sym& b) {
  if (a.is_tuple() != b.is_tuple()) return !a.is_tuple();
  if (!a.is_tuple()) return a.q_ < b.q_;
  return std::lexicographical_compare(a.items_.begin(), a.items_.end(),
                                      b.items_.begin(), b.items_.end());
}

bool Domain::contains(const Sym& v) const {
  if (kind == Sym::Kind::Tuple) {
    if (!v.is_tuple() || v.items().size() != components.size()) return false;
    for (size_t i = 0; i < components.size(); ++i)
      if (!components[i].contains(v.items()[i])) return false;
    return true;
  }
  if (v.is_tuple()) return false;
  switch (kind) {
    case Sym::Kind::Int:
      return rat_is_integer(v.q());
    case Sym::Kind::Rat:
      return true;
    case Sym::Kind::NonzeroRat:
      return v.q() != Rat(0);
    default:
      return false;
  }
}

namespace {

Binding sbind(std::string name, const Sym& v) {
  return {std::move(name), v.text(), -1};
}

std::string sample_note(unsigned seed, int n) {
  return "sampled (seed=" + std::to_string(seed) +
         ", n=" + std::to_string(n) + ")";
}

std::vector<Sym> gather(const SymbolicRpoGroup& g, std::mt19937_64& rng,
                        int n) {
  std::vector<Sym> out = g.boundary;
  for (int i = 0; i < n; ++i) {
    Sym v = g.draw(rng);
    if (!g.group.domain.contains(v))
      throw structural_error("sampler domain mismatch in " + g.group.name);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Sym> gather_cone(const SymbolicRpoGroup& g, std::mt19937_64& rng,
                             int n) {
  std::vector<Sym> out;
  for (const Sym& v : g.boundary)
    if (g.cone(v)) out.push_back(v);
  for (int i = 0; i < n; ++i) {
    Sym v = g.draw_cone(rng);
    if (!g.group.domain.contains(v) || !g.cone(v))
      throw structural_error("cone sampler mismatch in " + g.group.name);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Verdict sampled_validate(const SymbolicRpoGroup& g, unsigned seed, int n) {
  if (n < 1) throw precondition_error("sampled_validate: n must be positive");
  std::mt19937_64 rng(seed);
  const SymbolicGroup& G = g.group;
  if (!G.domain.contains(G.id))
    throw structural_error("identity outside the domain of " + G.name);
  if (!g.cone(G.id))
    return Verdict::no("cone-identity", {sbind("id", G.id)});

  std::vector<Sym> elems = gather(g, rng, n);
  const int cap = std::min<int>(static_cast<int>(elems.size()), 12);
  // identity and inverse laws on every gathered element
  for (const Sym& a : elems) {
    if (!(G.op(G.id, a) == a) || !(G.op(a, G.id) == a))
      return Verdict::no("identity", {sbind("a", a)});
    Sym b = G.inv(a);
    if (!G.domain.contains(b))
      throw structural_error("inverse leaves the domain of " + G.name);
    if (!(G.op(a, b) == G.id) || !(G.op(b, a) == G.id))
      return Verdict::no("inverses", {sbind("a", a)});
  }
  // associativity on boundary triples plus n random triples
  for (int i = 0; i < cap; ++i)
    for (int j = 0; j < cap; ++j)
      for (int k = 0; k < cap; ++k) {
        const Sym &a = elems[i], &b = elems[j], &c = elems[k];
        if (!(G.op(G.op(a, b), c) == G.op(a, G.op(b, c))))
          return Verdict::no("associativity",
                             {sbind("a", a), sbind("b", b), sbind("c", c)});
      }
  for (int t = 0; t < n; ++t) {
    Sym a = g.draw(rng), b = g.draw(rng), c = g.draw(rng);
    if (!(G.op(G.op(a, b), c) == G.op(a, G.op(b, c))))
      return Verdict::no("associativity",
                         {sbind("a", a), sbind("b", b), sbind("c", c)});
  }
  // cone closure on all pairs of gathered cone elements
  std::vector<Sym> cone_elems = gather_cone(g, rng, n);
  const int ccap = std::min<int>(static_cast<int>(cone_elems.size()), 64);
  for (int i = 0; i < ccap; ++i)
    for (int j = 0; j < ccap; ++j) {
      Sym s = G.op(cone_elems[i], cone_elems[j]);
      if (!g.cone(s))
        return Verdict::no("cone-closure",
                           {sbind("p", cone_elems[i]),
                            sbind("q", cone_elems[j]), sbind("p+q", s)});
    }
  return Verdict::yes("right-preordered group", sample_note(seed, n));
}

SymExpr SymExpr::elem(Sym v) {
  SymExpr e;
  e.tag = Tag::Element;
  e.value = std::move(v);
  return e;
}

SymExpr SymExpr::add(SymExpr a, SymExpr b) {
  SymExpr e;
  e.tag = Tag::Add;
  e.args = {std::move(a), std::move(b)};
  return e;
}

SymExpr SymExpr::neg(SymExpr a) {
  SymExpr e;
  e.tag = Tag::Neg;
  e.args = {std::move(a)};
  return e;
}

WitnessEval eval_witness(const SymExpr& e, const SymbolicRpoGroup& g) {
  std::function<Sym(const SymExpr&)> ev = [&](const SymExpr& x) -> Sym {
    switch (x.tag) {
      case SymExpr::Tag::Element:
        if (!g.group.domain.contains(x.value))
          throw structural_error("expression element outside the domain");
        return x.value;
      case SymExpr::Tag::Add: {
        Sym acc = ev(x.args[0]);
        for (size_t i = 1; i < x.args.size(); ++i)
          acc = g.group.op(acc, ev(x.args[i]));
        return acc;
      }
      case SymExpr::Tag::Neg:
        return g.group.inv(ev(x.args[0]));
    }
    throw structural_error("malformed expression");
  };
  Sym v = ev(e);
  return {v, g.cone(v)};
}

Verdict sym_is_normal_mono(const SymbolicMorphism& f, unsigned seed, int n) {
  std::mt19937_64 rng(seed);
  std::vector<Sym> dom_elems = gather(f.dom, rng, n);
  const SymbolicGroup& D = f.dom.group;
  const SymbolicGroup& C = f.cod.group;
  const int cap = std::min<int>(static_cast<int>(dom_elems.size()), 16);
  for (int i = 0; i < cap; ++i)
    for (int j = 0; j < cap; ++j)
      if (!(f.map(D.op(dom_elems[i], dom_elems[j])) ==
            C.op(f.map(dom_elems[i]), f.map(dom_elems[j]))))
        return Verdict::no("homomorphism", {sbind("a", dom_elems[i]),
                                            sbind("b", dom_elems[j])});
  for (const Sym& p : gather_cone(f.dom, rng, n))
    if (!f.cod.cone(f.map(p)))
      return Verdict::no("monotonicity", {sbind("p", p)});
  // normality of the image under sampled conjugation
  std::vector<Sym> cod_elems = gather(f.cod, rng, n);
  for (const Sym& x : cod_elems)
    for (int i = 0; i < cap; ++i) {
      Sym conj = C.op(C.op(x, f.map(dom_elems[i])), C.inv(x));
      if (!f.image_contains(conj))
        return Verdict::no("normality",
                           {sbind("x", x), sbind("a", dom_elems[i])});
    }
  // the mapped cone must be all of image-intersect-cone
  std::vector<Sym> cod_cone = gather_cone(f.cod, rng, n);
  for (const Sym& q : cod_cone)
    if (f.image_contains(q) && !f.dom.cone(f.preimage(q)))
      return Verdict::no("cone-equality", {sbind("q", q)},
                         "image-intersect-cone exceeds the mapped cone");
  return Verdict::yes("normal monomorphism", sample_note(seed, n));
}

Sym graph_m(const SymbolicGraph& g, const Sym& a, const Sym& b) {
  const SymbolicGroup& A = g.apex.group;
  return A.op(A.sub(b, g.e(g.c(b))), a);  // b - ec(b) + a
}

Sym graph_sigma(const SymbolicGraph& g, const Sym& a) {
  const SymbolicGroup& A = g.apex.group;
  return A.op(A.sub(g.e(g.c(a)), a), g.e(g.d(a)));  // ec(a) - a + ed(a)
}

Verdict sym_is_schreier(const SymbolicGraph& g, unsigned seed, int n) {
  std::mt19937_64 rng(seed);
  const SymbolicGroup& A = g.apex.group;
  for (const Sym& a : gather_cone(g.apex, rng, n)) {
    Sym residue = A.sub(a, g.e(g.d(a)));
    if (!g.apex.cone(residue))
      return Verdict::no("schreier",
                         {sbind("a", a), sbind("a-ed(a)", residue)});
  }
  return Verdict::yes("schreier", sample_note(seed, n));
}

Verdict sym_is_internal_category(const SymbolicGraph& g, unsigned seed,
                                 int n) {
  std::mt19937_64 rng(seed);
  const SymbolicGroup& A = g.apex.group;
  auto composable = [&](const std::pair<Sym, Sym>& p) {
    return g.d(p.first) == g.c(p.second);
  };
  for (const auto& p : g.boundary_composable)
    if (!composable(p))
      throw structural_error("registered pair is not composable");
  // homomorphism on sampled pairs of composable pairs
  std::vector<std::pair<Sym, Sym>> pairs = g.boundary_composable;
  for (int i = 0; i < n; ++i) {
    auto p = g.draw_composable(rng);
    if (!composable(p))
      throw structural_error("composable sampler mismatch");
    pairs.push_back(std::move(p));
  }
  const int cap = std::min<int>(static_cast<int>(pairs.size()), 24);
  for (int i = 0; i < cap; ++i)
    for (int j = 0; j < cap; ++j) {
      const auto& [a, b] = pairs[i];
      const auto& [a2, b2] = pairs[j];
      Sym sum_first = A.op(a, a2), sum_second = A.op(b, b2);
      if (!(graph_m(g, sum_first, sum_second) ==
            A.op(graph_m(g, a, b), graph_m(g, a2, b2))))
        return Verdict::no("m-homomorphism",
                           {sbind("a", a), sbind("b", b), sbind("a'", a2),
                            sbind("b'", b2)});
    }
  // monotonicity on sampled positive composable pairs
  for (const auto& p : g.boundary_composable) {
    if (!g.apex.cone(p.first) || !g.apex.cone(p.second)) continue;
    Sym v = graph_m(g, p.first, p.second);
    if (!g.apex.cone(v))
      return Verdict::no("m-monotonicity", {sbind("a", p.first),
                                            sbind("b", p.second),
                                            sbind("m(a,b)", v)});
  }
  for (int i = 0; i < n; ++i) {
    auto p = g.draw_composable_cone(rng);
    if (!composable(p) || !g.apex.cone(p.first) || !g.apex.cone(p.second))
      throw structural_error("positive composable sampler mismatch");
    Sym v = graph_m(g, p.first, p.second);
    if (!g.apex.cone(v))
      return Verdict::no("m-monotonicity", {sbind("a", p.first),
                                            sbind("b", p.second),
                                            sbind("m(a,b)", v)});
  }
  return Verdict::yes("internal category", sample_note(seed, n));
}

Verdict sym_is_groupoid(const SymbolicGraph& g, unsigned seed, int n) {
  if (Verdict cat = sym_is_internal_category(g, seed, n); !cat)
    throw precondition_error(
        "sym_is_groupoid: the graph is not an internal category (" + cat.law +
        " fails)");
  std::mt19937_64 rng(seed);
  const SymbolicGroup& A = g.apex.group;
  std::vector<Sym> elems = gather(g.apex, rng, n);
  const int cap = std::min<int>(static_cast<int>(elems.size()), 16);
  for (int i = 0; i < cap; ++i)
    for (int j = 0; j < cap; ++j)
      if (!(graph_sigma(g, A.op(elems[i], elems[j])) ==
            A.op(graph_sigma(g, elems[i]), graph_sigma(g, elems[j]))))
        return Verdict::no("sigma-homomorphism",
                           {sbind("a", elems[i]), sbind("b", elems[j])});
  for (const Sym& a : gather_cone(g.apex, rng, n)) {
    Sym s = graph_sigma(g, a);
    if (!g.apex.cone(s))
      return Verdict::no("sigma-monotonicity",
                         {sbind("a", a), sbind("sigma(a)", s)});
  }
  return Verdict::yes("groupoid", sample_note(seed, n));
}

SymbolicCenterResult sym_s_center(const SymbolicRpoGroup& g, unsigned seed,
                                  int n) {
  std::mt19937_64 rng(seed);
  for (const Sym& p : gather_cone(g, rng, n)) {
    Sym q = g.group.inv(p);
    if (!g.cone(q)) {
      SymbolicCenterResult out;
      out.refused = true;
      out.verdict = Verdict::no("cone-group", {sbind("p", p)},
                                "cone element without inverse in the cone");
      return out;
    }
  }
  SymbolicCenterResult out;
  out.refused = false;
  out.verdict = Verdict::yes("cone-group", sample_note(seed, n));
  out.description = g.group.abelian
                        ? "the whole object (abelian carrier)"
                        : "kernel of the conjugation action";
  return out;
}

Rat draw_small_rat(std::mt19937_64& rng, int height, bool nonzero) {
  std::uniform_int_distribution<long long> num(-height, height);
  std::uniform_int_distribution<long long> den(1, height);
  for (;;) {
    long long p = num(rng), q = den(rng);
    if (nonzero && p == 0) continue;
    return Rat(p, q);
  }
}

}  // namespace rpog
