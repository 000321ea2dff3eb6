#include "rpog/registry.hpp"

#include <algorithm>

#include "rpog/catalog.hpp"
#include "rpog/finite_core.hpp"

namespace rpog {

namespace {

long long draw_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % (hi - lo + 1));
}

Sym s_int(long long v) { return Sym::integer(v); }
Sym s_rat(long long p, long long q = 1) { return Sym::rational(Rat(p, q)); }
Sym s_nz(long long p, long long q = 1) { return Sym::nonzero(Rat(p, q)); }
Sym s_pair(Sym a, Sym b) {
  return Sym::tuple({std::move(a), std::move(b)});
}

// ---- integers ------------------------------------------------------

SymbolicGroup int_group() {
  SymbolicGroup g;
  g.name = "Z";
  g.domain = Domain::integers();
  g.id = s_int(0);
  g.op = [](const Sym& a, const Sym& b) {
    return Sym::integer(a.q().numerator() + b.q().numerator());
  };
  g.inv = [](const Sym& a) { return Sym::integer(-a.q().numerator()); };
  g.abelian = true;
  return g;
}

SymbolicRpoGroup make_Z_N() {
  SymbolicRpoGroup g;
  g.group = int_group();
  g.cone = [](const Sym& v) { return v.q() >= Rat(0); };
  g.draw = [](std::mt19937_64& rng) {
    return s_int(draw_range(rng, -10, 10));
  };
  g.draw_cone = [](std::mt19937_64& rng) {
    return s_int(draw_range(rng, 0, 10));
  };
  g.boundary = {s_int(0), s_int(1), s_int(-1), s_int(2), s_int(-2), s_int(5)};
  return g;
}

SymbolicRpoGroup make_Z_triv() {
  SymbolicRpoGroup g = make_Z_N();
  g.cone = [](const Sym& v) { return v.q() == Rat(0); };
  g.draw_cone = [](std::mt19937_64&) { return s_int(0); };
  return g;
}

SymbolicRpoGroup make_ZxZ_diagN() {
  SymbolicRpoGroup g;
  g.group.name = "ZxZ";
  g.group.domain = Domain::tuple({Domain::integers(), Domain::integers()});
  g.group.id = s_pair(s_int(0), s_int(0));
  g.group.op = [](const Sym& a, const Sym& b) {
    return s_pair(
        Sym::integer(a.items()[0].q().numerator() +
                     b.items()[0].q().numerator()),
        Sym::integer(a.items()[1].q().numerator() +
                     b.items()[1].q().numerator()));
  };
  g.group.inv = [](const Sym& a) {
    return s_pair(Sym::integer(-a.items()[0].q().numerator()),
                  Sym::integer(-a.items()[1].q().numerator()));
  };
  g.group.abelian = true;
  g.cone = [](const Sym& v) {
    return v.items()[0] == v.items()[1] && v.items()[0].q() >= Rat(0);
  };
  g.draw = [](std::mt19937_64& rng) {
    return s_pair(s_int(draw_range(rng, -10, 10)),
                  s_int(draw_range(rng, -10, 10)));
  };
  g.draw_cone = [](std::mt19937_64& rng) {
    long long k = draw_range(rng, 0, 10);
    return s_pair(s_int(k), s_int(k));
  };
  g.boundary = {s_pair(s_int(0), s_int(0)), s_pair(s_int(1), s_int(1)),
                s_pair(s_int(2), s_int(2)), s_pair(s_int(2), s_int(3)),
                s_pair(s_int(1), s_int(0)), s_pair(s_int(-1), s_int(-1))};
  return g;
}

// ---- multiplicative rationals ---------------------------------------

SymbolicGroup mult_group() {
  SymbolicGroup g;
  g.name = "Q*";
  g.domain = Domain::nonzero_rationals();
  g.id = s_nz(1);
  g.op = [](const Sym& a, const Sym& b) {
    return Sym::nonzero(a.q() * b.q());
  };
  g.inv = [](const Sym& a) { return Sym::nonzero(Rat(1) / a.q()); };
  g.abelian = true;
  return g;
}

bool is_pm1(const Rat& q) { return q == Rat(1) || q == Rat(-1); }

Rat draw_abs_le1(std::mt19937_64& rng, bool strict) {
  long long den = draw_range(rng, strict ? 2 : 1, 10);
  long long hi = strict ? den - 1 : den;
  long long num = draw_range(rng, 1, hi);
  if (rng() & 1) num = -num;
  return Rat(num, den);
}

// base object of the Ex1 graph: (Q*, N*)
SymbolicRpoGroup make_Ex1_base() {
  SymbolicRpoGroup g;
  g.group = mult_group();
  g.cone = [](const Sym& v) {
    return rat_is_integer(v.q()) && v.q() >= Rat(1);
  };
  g.draw = [](std::mt19937_64& rng) {
    return Sym::nonzero(draw_small_rat(rng, 10, true));
  };
  g.draw_cone = [](std::mt19937_64& rng) {
    return s_nz(draw_range(rng, 1, 10));
  };
  g.boundary = {s_nz(1), s_nz(2), s_nz(3), s_nz(1, 2), s_nz(-1), s_nz(6)};
  return g;
}

// apex of the Ex1 graph: Q x| Q* with (a,b)+(c,d) = (a+bc, bd)
SymbolicRpoGroup make_Ex1_apex() {
  SymbolicRpoGroup g;
  g.group.name = "QxQ*";
  g.group.domain =
      Domain::tuple({Domain::rationals(), Domain::nonzero_rationals()});
  g.group.id = s_pair(s_rat(0), s_nz(1));
  g.group.op = [](const Sym& x, const Sym& y) {
    const Rat &a = x.items()[0].q(), &b = x.items()[1].q();
    const Rat &c = y.items()[0].q(), &d = y.items()[1].q();
    return s_pair(Sym::rational(a + b * c), Sym::nonzero(b * d));
  };
  g.group.inv = [](const Sym& x) {
    const Rat &a = x.items()[0].q(), &b = x.items()[1].q();
    return s_pair(Sym::rational(-(a / b)), Sym::nonzero(Rat(1) / b));
  };
  g.group.abelian = false;
  // (even naturals with any positive natural multiplier) union
  // (odd naturals with even positive multiplier)
  g.cone = [](const Sym& v) {
    const Rat &a = v.items()[0].q(), &b = v.items()[1].q();
    if (!rat_is_integer(a) || a < Rat(0)) return false;
    if (!rat_is_integer(b) || b < Rat(1)) return false;
    if (a.numerator() % 2 == 0) return true;
    return b.numerator() % 2 == 0;
  };
  g.draw = [](std::mt19937_64& rng) {
    return s_pair(Sym::rational(draw_small_rat(rng, 10, false)),
                  Sym::nonzero(draw_small_rat(rng, 10, true)));
  };
  g.draw_cone = [](std::mt19937_64& rng) {
    bool odd = rng() & 1;
    long long a = 2 * draw_range(rng, 0, 5) + (odd ? 1 : 0);
    long long b = odd ? 2 * draw_range(rng, 1, 5) : draw_range(rng, 1, 10);
    return s_pair(s_rat(a), s_nz(b));
  };
  g.boundary = {s_pair(s_rat(0), s_nz(1)),  s_pair(s_rat(2), s_nz(1)),
                s_pair(s_rat(3), s_nz(2)),  s_pair(s_rat(1), s_nz(2)),
                s_pair(s_rat(0), s_nz(2)),  s_pair(s_rat(4), s_nz(3)),
                s_pair(s_rat(2), s_nz(3)),  s_pair(s_rat(0), s_nz(1, 2)),
                s_pair(s_rat(3), s_nz(1))};
  return g;
}

SymbolicGraph make_Ex1() {
  SymbolicGraph g;
  g.apex = make_Ex1_apex();
  g.base = make_Ex1_base();
  g.d = [](const Sym& v) { return v.items()[1]; };
  g.c = [](const Sym& v) { return v.items()[1]; };
  g.e = [](const Sym& x) { return s_pair(s_rat(0), x); };
  g.note = "both legs are the second projection";
  g.draw_composable = [](std::mt19937_64& rng) {
    Rat s = draw_small_rat(rng, 10, true);
    return std::pair{
        s_pair(Sym::rational(draw_small_rat(rng, 10, false)), Sym::nonzero(s)),
        s_pair(Sym::rational(draw_small_rat(rng, 10, false)),
               Sym::nonzero(s))};
  };
  g.draw_composable_cone = [](std::mt19937_64& rng) {
    bool s_even = rng() & 1;
    long long s = s_even ? 2 * draw_range(rng, 1, 5) : 2 * draw_range(rng, 0, 4) + 1;
    auto first_coord = [&](std::mt19937_64& r) {
      return s_even ? draw_range(r, 0, 10) : 2 * draw_range(r, 0, 5);
    };
    return std::pair{s_pair(s_rat(first_coord(rng)), s_nz(s)),
                     s_pair(s_rat(first_coord(rng)), s_nz(s))};
  };
  g.boundary_composable = {
      {s_pair(s_rat(2), s_nz(1)), s_pair(s_rat(0), s_nz(1))},
      {s_pair(s_rat(3), s_nz(2)), s_pair(s_rat(1), s_nz(2))},
      {s_pair(s_rat(2), s_nz(3)), s_pair(s_rat(4), s_nz(3))},
      {s_pair(s_rat(0), s_nz(2)), s_pair(s_rat(3), s_nz(2))}};
  return g;
}

// Ex2: apex Z x Z with cone N x Z over base Z with the full cone.
SymbolicRpoGroup make_Ex2_apex() {
  SymbolicRpoGroup g = make_ZxZ_diagN();
  g.group.name = "ZxZ";
  g.cone = [](const Sym& v) { return v.items()[0].q() >= Rat(0); };
  g.draw_cone = [](std::mt19937_64& rng) {
    return s_pair(s_int(draw_range(rng, 0, 10)),
                  s_int(draw_range(rng, -10, 10)));
  };
  g.boundary = {s_pair(s_int(0), s_int(0)), s_pair(s_int(1), s_int(0)),
                s_pair(s_int(0), s_int(1)), s_pair(s_int(2), s_int(-1)),
                s_pair(s_int(1), s_int(1)), s_pair(s_int(-1), s_int(2)),
                s_pair(s_int(3), s_int(-2))};
  return g;
}

SymbolicRpoGroup make_Z_full() {
  SymbolicRpoGroup g = make_Z_N();
  g.cone = [](const Sym&) { return true; };
  g.draw_cone = g.draw;
  return g;
}

SymbolicGraph make_Ex2() {
  SymbolicGraph g;
  g.apex = make_Ex2_apex();
  g.base = make_Z_full();
  g.d = [](const Sym& v) { return v.items()[1]; };
  g.c = [](const Sym& v) {
    return Sym::integer(v.items()[0].q().numerator() +
                        v.items()[1].q().numerator());
  };
  g.e = [](const Sym& x) { return s_pair(s_int(0), x); };
  g.note = "legs are the second projection and the coordinate sum";
  g.draw_composable = [](std::mt19937_64& rng) {
    long long c0 = draw_range(rng, -8, 8), d0 = draw_range(rng, -8, 8);
    long long a = draw_range(rng, -8, 8);
    return std::pair{s_pair(s_int(a), s_int(c0 + d0)),
                     s_pair(s_int(c0), s_int(d0))};
  };
  g.draw_composable_cone = [](std::mt19937_64& rng) {
    long long c0 = draw_range(rng, 0, 8), d0 = draw_range(rng, -8, 8);
    long long a = draw_range(rng, 0, 8);
    return std::pair{s_pair(s_int(a), s_int(c0 + d0)),
                     s_pair(s_int(c0), s_int(d0))};
  };
  g.boundary_composable = {
      {s_pair(s_int(0), s_int(1)), s_pair(s_int(1), s_int(0))},
      {s_pair(s_int(1), s_int(3)), s_pair(s_int(2), s_int(1))},
      {s_pair(s_int(2), s_int(-1)), s_pair(s_int(1), s_int(-2))}};
  return g;
}

// Ex3 / Ex4: apex Q* x Q* (componentwise multiplication) over base Q*.
SymbolicRpoGroup make_QxQ_apex(bool variant4) {
  SymbolicRpoGroup g;
  g.group.name = "Q*xQ*";
  g.group.domain = Domain::tuple(
      {Domain::nonzero_rationals(), Domain::nonzero_rationals()});
  g.group.id = s_pair(s_nz(1), s_nz(1));
  g.group.op = [](const Sym& a, const Sym& b) {
    return s_pair(Sym::nonzero(a.items()[0].q() * b.items()[0].q()),
                  Sym::nonzero(a.items()[1].q() * b.items()[1].q()));
  };
  g.group.inv = [](const Sym& a) {
    return s_pair(Sym::nonzero(Rat(1) / a.items()[0].q()),
                  Sym::nonzero(Rat(1) / a.items()[1].q()));
  };
  g.group.abelian = true;
  if (!variant4) {
    g.cone = [](const Sym& v) {
      const Rat &x = v.items()[0].q(), &y = v.items()[1].q();
      if (is_pm1(x)) return rat_abs(y) <= Rat(1);
      return rat_abs(y) < Rat(1);
    };
  } else {
    g.cone = [](const Sym& v) {
      const Rat &x = v.items()[0].q(), &y = v.items()[1].q();
      if (is_pm1(x)) return rat_abs(y) <= Rat(1);
      return rat_abs(x) < Rat(1) && rat_abs(y) < Rat(1);
    };
  }
  g.draw = [](std::mt19937_64& rng) {
    return s_pair(Sym::nonzero(draw_small_rat(rng, 10, true)),
                  Sym::nonzero(draw_small_rat(rng, 10, true)));
  };
  if (!variant4) {
    g.draw_cone = [](std::mt19937_64& rng) {
      if (rng() & 1)
        return s_pair(s_nz(rng() & 1 ? 1 : -1),
                      Sym::nonzero(draw_abs_le1(rng, false)));
      for (;;) {
        Rat x = draw_small_rat(rng, 10, true);
        if (is_pm1(x)) continue;
        return s_pair(Sym::nonzero(x), Sym::nonzero(draw_abs_le1(rng, true)));
      }
    };
  } else {
    g.draw_cone = [](std::mt19937_64& rng) {
      if (rng() & 1)
        return s_pair(s_nz(rng() & 1 ? 1 : -1),
                      Sym::nonzero(draw_abs_le1(rng, false)));
      return s_pair(Sym::nonzero(draw_abs_le1(rng, true)),
                    Sym::nonzero(draw_abs_le1(rng, true)));
    };
  }
  g.boundary = {s_pair(s_nz(1), s_nz(1)),      s_pair(s_nz(5), s_nz(1, 2)),
                s_pair(s_nz(1), s_nz(1, 2)),   s_pair(s_nz(-1), s_nz(1)),
                s_pair(s_nz(2), s_nz(1, 3)),   s_pair(s_nz(1, 2), s_nz(1, 2)),
                s_pair(s_nz(-1), s_nz(-1)),    s_pair(s_nz(3), s_nz(1, 5)),
                s_pair(s_nz(2), s_nz(1, 2)),   s_pair(s_nz(5), s_nz(1))};
  return g;
}

SymbolicRpoGroup make_Q_le1_base() {
  SymbolicRpoGroup g;
  g.group = mult_group();
  g.cone = [](const Sym& v) { return rat_abs(v.q()) <= Rat(1); };
  g.draw = [](std::mt19937_64& rng) {
    return Sym::nonzero(draw_small_rat(rng, 10, true));
  };
  g.draw_cone = [](std::mt19937_64& rng) {
    return Sym::nonzero(draw_abs_le1(rng, false));
  };
  g.boundary = {s_nz(1), s_nz(-1), s_nz(1, 2), s_nz(2), s_nz(-1, 3)};
  return g;
}

SymbolicGraph make_Ex34(bool variant4) {
  SymbolicGraph g;
  g.apex = make_QxQ_apex(variant4);
  g.base = make_Q_le1_base();
  g.d = [](const Sym& v) { return v.items()[1]; };
  g.c = [](const Sym& v) { return v.items()[1]; };
  g.e = [](const Sym& x) { return s_pair(s_nz(1), x); };
  g.note = "both legs are the second projection";
  g.draw_composable = [](std::mt19937_64& rng) {
    Rat s = draw_small_rat(rng, 10, true);
    return std::pair{
        s_pair(Sym::nonzero(draw_small_rat(rng, 10, true)), Sym::nonzero(s)),
        s_pair(Sym::nonzero(draw_small_rat(rng, 10, true)), Sym::nonzero(s))};
  };
  auto draw_first = [variant4](std::mt19937_64& rng, bool strict_y) {
    // a cone-compatible first coordinate given the shared second has
    // absolute value < 1 (strict_y) or == 1
    if (!strict_y || !(rng() & 1))
      return Sym::nonzero(Rat(rng() & 1 ? 1 : -1));
    if (variant4) return Sym::nonzero(draw_abs_le1(rng, true));
    for (;;) {
      Rat x = draw_small_rat(rng, 10, true);
      if (!is_pm1(x)) return Sym::nonzero(x);
    }
  };
  g.draw_composable_cone = [draw_first](std::mt19937_64& rng) {
    bool strict = rng() & 1;
    Rat s = strict ? draw_abs_le1(rng, true) : Rat(rng() & 1 ? 1 : -1);
    return std::pair{s_pair(draw_first(rng, strict), Sym::nonzero(s)),
                     s_pair(draw_first(rng, strict), Sym::nonzero(s))};
  };
  g.boundary_composable = {
      {s_pair(s_nz(5), s_nz(1, 2)), s_pair(s_nz(1), s_nz(1, 2))},
      {s_pair(s_nz(1, 2), s_nz(1, 2)), s_pair(s_nz(1), s_nz(1, 2))},
      {s_pair(s_nz(-1), s_nz(1)), s_pair(s_nz(1), s_nz(1))}};
  return g;
}

// ---- bundles --------------------------------------------------------

std::optional<std::string> replay_schreier_witness(const SymbolicGraph& g,
                                                   const Sym& a) {
  if (!g.apex.cone(a)) return std::nullopt;
  Sym residue = g.apex.group.sub(a, g.e(g.d(a)));
  if (g.apex.cone(residue)) return std::nullopt;
  return a.text() + "-" + g.e(g.d(a)).text() + "=" + residue.text() +
         " not in cone";
}

std::optional<std::string> replay_sigma_witness(const SymbolicGraph& g,
                                                const Sym& a) {
  if (!g.apex.cone(a)) return std::nullopt;
  Sym s = graph_sigma(g, a);
  if (g.apex.cone(s)) return std::nullopt;
  return "sigma(" + a.text() + ")=" + s.text() + " not in cone";
}

ExampleBundle graph_bundle(std::string id, std::string title,
                           const SymbolicGraph& g, bool schreier,
                           bool category, bool groupoid,
                           std::optional<Sym> schreier_witness,
                           std::optional<Sym> sigma_witness) {
  ExampleBundle b{std::move(id), std::move(title), {}};
  b.checks.push_back(
      {"schreier", schreier,
       [g](unsigned seed, int n) { return sym_is_schreier(g, seed, n); },
       schreier_witness
           ? std::function<std::optional<std::string>()>(
                 [g, w = *schreier_witness]() {
                   return replay_schreier_witness(g, w);
                 })
           : nullptr});
  b.checks.push_back({"category", category,
                      [g](unsigned seed, int n) {
                        return sym_is_internal_category(g, seed, n);
                      },
                      nullptr});
  b.checks.push_back(
      {"groupoid", groupoid,
       [g](unsigned seed, int n) { return sym_is_groupoid(g, seed, n); },
       sigma_witness ? std::function<std::optional<std::string>()>(
                           [g, w = *sigma_witness]() {
                             return replay_sigma_witness(g, w);
                           })
                     : nullptr});
  return b;
}

ExampleBundle s4_bundle() {
  ExampleBundle b{"S4_counterexample",
                  "conjugation-closure fails for the order-2 cone on S4",
                  {}};
  b.checks.push_back({"validate", true,
                      [](unsigned, int) {
                        return validate(*catalog::rpo_by_name("S4_P2"));
                      },
                      nullptr});
  b.checks.push_back({"preordered-A4", true,
                      [](unsigned, int) {
                        return is_preordered(*catalog::rpo_by_name("S4_A4"));
                      },
                      nullptr});
  b.checks.push_back(
      {"preordered-P2", false,
       [](unsigned, int) {
         return is_preordered(*catalog::rpo_by_name("S4_P2"));
       },
       []() -> std::optional<std::string> {
         FiniteRpoGroup g = *catalog::rpo_by_name("S4_P2");
         Elem x = *element_by_name(g.group, "(13)");
         Elem p = *element_by_name(g.group, "(12)(34)");
         Elem c = g.group.conj(x, p);
         if (g.cone.contains(c)) return std::nullopt;
         return "(13)(12)(34)(13)=" + g.group.element_name(c) +
                " not in cone";
       }});
  return b;
}

ExampleBundle z_not_normal_bundle() {
  ExampleBundle b{"Z_not_normal",
                  "a monomorphism into (Z,N) that is not a kernel",
                  {}};
  b.checks.push_back(
      {"normal-mono", false,
       [](unsigned seed, int n) {
         SymbolicMorphism f{make_Z_triv(), make_Z_N(),
                            [](const Sym& v) { return v; },
                            [](const Sym&) { return true; },
                            [](const Sym& v) { return v; }};
         return sym_is_normal_mono(f, seed, n);
       },
       []() -> std::optional<std::string> {
         SymbolicRpoGroup dom = make_Z_triv(), cod = make_Z_N();
         Sym one = s_int(1);
         if (!cod.cone(one) || dom.cone(one)) return std::nullopt;
         return "1 in image-intersect-cone but not in the mapped cone";
       }});
  return b;
}

ExampleBundle rpo_bundle(std::string id, std::string title,
                         SymbolicRpoGroup (*make)(), bool center_refused,
                         std::optional<Sym> no_inverse_witness) {
  ExampleBundle b{std::move(id), std::move(title), {}};
  b.checks.push_back({"validate", true,
                      [make](unsigned seed, int n) {
                        return sampled_validate(make(), seed, n);
                      },
                      nullptr});
  b.checks.push_back(
      {"s-center-defined", !center_refused,
       [make](unsigned seed, int n) {
         SymbolicCenterResult r = sym_s_center(make(), seed, n);
         return r.verdict;
       },
       no_inverse_witness
           ? std::function<std::optional<std::string>()>(
                 [make, w = *no_inverse_witness]() -> std::optional<std::string> {
                   SymbolicRpoGroup g = make();
                   if (!g.cone(w) || g.cone(g.group.inv(w)))
                     return std::nullopt;
                   return w.text() + " has no inverse in the cone";
                 })
           : nullptr});
  return b;
}

ExampleBundle zxz_bundle() {
  ExampleBundle b{"ZxZ_diagN", "Z x Z with the diagonal cone", {}};
  b.checks.push_back({"validate", true,
                      [](unsigned seed, int n) {
                        return sampled_validate(make_ZxZ_diagN(), seed, n);
                      },
                      nullptr});
  b.checks.push_back({"contains-(2,2)", true,
                      [](unsigned, int) {
                        SymbolicRpoGroup g = make_ZxZ_diagN();
                        Sym v = s_pair(s_int(2), s_int(2));
                        return g.cone(v) ? Verdict::yes("membership")
                                         : Verdict::no("membership", {});
                      },
                      nullptr});
  b.checks.push_back({"contains-(2,3)", false,
                      [](unsigned, int) {
                        SymbolicRpoGroup g = make_ZxZ_diagN();
                        Sym v = s_pair(s_int(2), s_int(3));
                        return g.cone(v) ? Verdict::yes("membership")
                                         : Verdict::no("membership", {});
                      },
                      nullptr});
  return b;
}

}  // namespace

std::optional<ExampleObject> build_example(const std::string& id) {
  if (id == "Z_N") return ExampleObject{make_Z_N()};
  if (id == "Z_triv") return ExampleObject{make_Z_triv()};
  if (id == "ZxZ_diagN") return ExampleObject{make_ZxZ_diagN()};
  if (id == "Ex1") return ExampleObject{make_Ex1()};
  if (id == "Ex2") return ExampleObject{make_Ex2()};
  if (id == "Ex3") return ExampleObject{make_Ex34(false)};
  if (id == "Ex4") return ExampleObject{make_Ex34(true)};
  return std::nullopt;
}

std::vector<std::string> example_ids() {
  return {"Z_N",  "Z_triv", "ZxZ_diagN",         "Ex1",
          "Ex2",  "Ex3",    "Ex4",               "S4_counterexample",
          "Z_not_normal"};
}

std::optional<ExampleBundle> example_bundle(const std::string& id) {
  if (id == "Ex1")
    return graph_bundle(
        "Ex1", "internal category, not Schreier, not a groupoid", make_Ex1(),
        false, true, false, s_pair(s_rat(3), s_nz(2)),
        s_pair(s_rat(2), s_nz(1)));
  if (id == "Ex2")
    return graph_bundle("Ex2", "Schreier internal category, not a groupoid",
                        make_Ex2(), true, true, false, std::nullopt,
                        s_pair(s_int(1), s_int(0)));
  if (id == "Ex3")
    return graph_bundle("Ex3", "groupoid, not a Schreier internal category",
                        make_Ex34(false), false, true, true,
                        s_pair(s_nz(5), s_nz(1, 2)), std::nullopt);
  if (id == "Ex4")
    return graph_bundle("Ex4", "internal category, neither Schreier nor a groupoid",
                        make_Ex34(true), false, true, false,
                        s_pair(s_nz(1, 2), s_nz(1, 2)),
                        s_pair(s_nz(1, 2), s_nz(1, 2)));
  if (id == "Z_N")
    return rpo_bundle("Z_N", "the integers with the natural cone", &make_Z_N,
                      true, s_int(1));
  if (id == "Z_triv")
    return rpo_bundle("Z_triv", "the integers with the trivial cone",
                      &make_Z_triv, false, std::nullopt);
  if (id == "ZxZ_diagN") return zxz_bundle();
  if (id == "S4_counterexample") return s4_bundle();
  if (id == "Z_not_normal") return z_not_normal_bundle();
  return std::nullopt;
}

}  // namespace rpog
