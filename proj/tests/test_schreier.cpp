#include "doctest.h"
#include "rpog/catalog.hpp"
#include "rpog/schreier.hpp"

using namespace rpog;

namespace {

std::vector<FiniteRpoGroup> corpus(int max_order) {
  std::vector<FiniteRpoGroup> out;
  for (const FiniteGroup& g : catalog::groups_upto(max_order))
    for (const Cone& c : enumerate_cones(g)) out.push_back({g, c});
  return out;
}

ActionMorphism trivial_action(const FiniteRpoGroup& base,
                              const FiniteRpoGroup& target) {
  std::vector<Elem> id(target.order());
  for (int i = 0; i < target.order(); ++i) id[i] = i;
  return {base, target, std::vector<std::vector<Elem>>(base.order(), id)};
}

}  // namespace

TEST_CASE("the identity point is Schreier") {
  FiniteRpoGroup g = *catalog::rpo_by_name("S4_A4");
  SplitPoint p{g, g, RpoMorphism::identity(g), RpoMorphism::identity(g)};
  CHECK(is_schreier(p).holds);
}

TEST_CASE("semidirect with the trivial action is the product point") {
  FiniteRpoGroup k = *catalog::rpo_by_name("C3_triv");
  FiniteRpoGroup b = *catalog::rpo_by_name("C2_full");
  SemidirectPoint sp = semidirect(trivial_action(b, k));
  CHECK(sp.point.total.order() == 6);
  CHECK(is_schreier(sp.point).holds);
  CHECK(check_morphism(sp.i0).holds);
  CHECK(check_morphism(sp.i1).holds);
  // abelian total group here
  const FiniteGroup& t = sp.point.total.group;
  for (Elem a = 0; a < 6; ++a)
    for (Elem c = 0; c < 6; ++c) CHECK(t.op(a, c) == t.op(c, a));
}

TEST_CASE("C3 x| C2 by inversion is a Schreier point of order 6") {
  FiniteRpoGroup k = *catalog::rpo_by_name("C3_triv");
  FiniteRpoGroup b = *catalog::rpo_by_name("C2_full");
  // inversion action of the order-2 base
  std::vector<std::vector<Elem>> act = {{0, 1, 2}, {0, 2, 1}};
  ActionMorphism mu{b, k, act};
  REQUIRE(mu.check().holds);
  SemidirectPoint sp = semidirect(mu);
  CHECK(sp.point.total.order() == 6);
  CHECK(is_schreier(sp.point).holds);
  // the result is the symmetric group on three letters
  CHECK(find_group_iso(sp.point.total.group, catalog::symmetric(3))
            .has_value());
  // and the total cone is the product cone {0} x C2
  CHECK(sp.point.total.cone.size() == 2);
}

TEST_CASE("non-monotone actions are precondition errors") {
  FiniteGroup v4 = catalog::klein4();
  Cone c;
  c.add(0);
  c.add(1);
  FiniteRpoGroup target{v4, c};
  FiniteRpoGroup base = *catalog::rpo_by_name("C2_full");
  // the swap 1 <-> 2 does not preserve the cone {0,1}
  std::vector<std::vector<Elem>> act = {{0, 1, 2, 3}, {0, 2, 1, 3}};
  ActionMorphism mu{base, target, act};
  CHECK_FALSE(mu.check().holds);
  CHECK_THROWS_AS(semidirect(mu), precondition_error);
}

TEST_CASE("conjugation action of an object on itself gives a Schreier point") {
  for (const char* name : {"S3_full", "S3_triv", "C4_full"}) {
    FiniteRpoGroup g = *catalog::rpo_by_name(name);
    std::vector<std::vector<Elem>> act(g.order(),
                                       std::vector<Elem>(g.order()));
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem a = 0; a < g.order(); ++a) act[x][a] = g.group.conj(x, a);
    ActionMorphism mu{g, g, std::move(act)};
    REQUIRE(mu.check().holds);  // cones are subgroups, so conjugation
                                // by positives preserves them
    SemidirectPoint sp = semidirect(mu);
    CHECK(is_schreier(sp.point).holds);
    CHECK(classify_point(sp.point).is_prod);
  }
}

TEST_CASE("classification recovers the action and the product cone") {
  FiniteRpoGroup k = *catalog::rpo_by_name("C3_triv");
  FiniteRpoGroup b = *catalog::rpo_by_name("C2_full");
  std::vector<std::vector<Elem>> act = {{0, 1, 2}, {0, 2, 1}};
  SemidirectPoint sp = semidirect(ActionMorphism{b, k, act});
  PointClassification cl = classify_point(sp.point);
  CHECK(cl.kernel.order() == 3);
  CHECK(cl.kernel.cone.size() == 1);
  CHECK(cl.is_prod);
  CHECK(cl.prod_below);
  CHECK(cl.below_lex);
  REQUIRE(cl.recovered.act.size() == 2);
  CHECK(cl.recovered.act[0] == act[0]);
  CHECK(cl.recovered.act[1] == act[1]);
}

TEST_CASE("every split point over the small corpus is Schreier with a product cone") {
  // finite cones are subgroups, so the lexicographic window collapses:
  // the search over cones strictly between product and lexicographic
  // cones is exhausted without finding any
  long points = 0;
  for (const FiniteRpoGroup& g : corpus(8)) {
    for (const SplitPoint& p : enumerate_split_points(g)) {
      ++points;
      PointClassification cl = classify_point(p);
      CHECK(is_schreier(p).holds == cl.is_prod);
      CHECK(cl.is_prod);
      CHECK(cl.prod_below);
      CHECK(cl.below_lex);
    }
  }
  MESSAGE("checked ", points, " split points; no strictly-between cone exists");
  CHECK(points > 500);
}

TEST_CASE("aut_rpo shapes") {
  SUBCASE("Klein four with a 2-element cone") {
    FiniteGroup v4 = catalog::klein4();
    Cone c;
    c.add(0);
    c.add(1);
    AutRpo a = aut_rpo({v4, c});
    CHECK(a.rpo.order() == 6);
    CHECK(a.rpo.cone.size() == 2);
    CHECK(validate(a.rpo).holds);
    CHECK(find_group_iso(a.rpo.group, catalog::symmetric(3)).has_value());
  }
  SUBCASE("zero object") {
    AutRpo a = aut_rpo({catalog::trivial(), ElemSet::single(0)});
    CHECK(a.rpo.order() == 1);
  }
  SUBCASE("C3 with the trivial cone") {
    AutRpo a = aut_rpo(*catalog::rpo_by_name("C3_triv"));
    CHECK(a.rpo.order() == 2);
    CHECK(a.rpo.cone == a.rpo.group.full_set());
  }
  SUBCASE("the monotone cone is composition-closed with the identity") {
    for (const FiniteRpoGroup& g : corpus(6)) {
      AutRpo a = aut_rpo(g);
      CHECK(a.rpo.cone.contains(0));
      CHECK(a.rpo.group.is_submonoid(a.rpo.cone));
    }
  }
}

TEST_CASE("action representability on the recorded pairs") {
  SUBCASE("zero kernel") {
    FiniteRpoGroup zero{catalog::trivial(), ElemSet::single(0)};
    for (const char* y : {"C2_full", "S3_triv", "C4_full"}) {
      ActionRepReport r = check_action_rep(zero, *catalog::rpo_by_name(y));
      CHECK(r.verdict.holds);
      CHECK(r.morphism_count == 1);
    }
  }
  SUBCASE("C2 on C2") {
    ActionRepReport r = check_action_rep(*catalog::rpo_by_name("C2_full"),
                                         *catalog::rpo_by_name("C2_full"));
    CHECK(r.verdict.holds);
    CHECK(r.morphism_count == 1);
  }
  SUBCASE("C3 trivial cone under C2 full: two classes") {
    ActionRepReport r = check_action_rep(*catalog::rpo_by_name("C3_triv"),
                                         *catalog::rpo_by_name("C2_full"));
    CHECK(r.verdict.holds);
    CHECK(r.morphism_count == 2);
    CHECK(r.extension_count == 2);
  }
  SUBCASE("size guard") {
    CHECK_THROWS_AS(check_action_rep(*catalog::rpo_by_name("S4_A4"),
                                     *catalog::rpo_by_name("S4_A4")),
                    precondition_error);
  }
}

TEST_CASE("s_center on finite objects") {
  SUBCASE("abelian objects return themselves") {
    for (const char* name : {"C4_full", "C6_triv"}) {
      FiniteRpoGroup g = *catalog::rpo_by_name(name);
      NormalSubobject z = s_center(g);
      CHECK(z.subgroup == g.group.full_set());
      CHECK(z.cone == g.cone);
    }
  }
  SUBCASE("(S3, trivial cone) returns the zero object") {
    NormalSubobject z = s_center(*catalog::rpo_by_name("S3_triv"));
    CHECK(z.subgroup.size() == 1);
    CHECK(z.cone.size() == 1);
  }
}

TEST_CASE("pullback of a Schreier point along corpus morphisms is Schreier") {
  FiniteRpoGroup k = *catalog::rpo_by_name("C3_triv");
  FiniteRpoGroup b = *catalog::rpo_by_name("C2_full");
  std::vector<std::vector<Elem>> act = {{0, 1, 2}, {0, 2, 1}};
  SemidirectPoint sp = semidirect(ActionMorphism{b, k, act});
  for (const FiniteRpoGroup& y : corpus(6))
    for (const RpoMorphism& f : monotone_morphisms(y, sp.point.base)) {
      SplitPoint pulled = pullback_point(sp.point, f);
      CHECK(is_schreier(pulled).holds);
      CHECK(pulled.base.order() == y.order());
    }
}
