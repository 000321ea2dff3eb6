#include "rpog/json_io.hpp"

#include <fstream>

#include "rpog/catalog.hpp"

namespace rpog {

namespace {

std::vector<Elem> int_array(const Json& j, const char* what) {
  if (!j.is_array())
    throw structural_error(std::string(what) + " must be an array");
  std::vector<Elem> out;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw structural_error(std::string(what) + " must hold integers");
    out.push_back(x.get<Elem>());
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw structural_error(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw structural_error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw structural_error("parse error in '" + path + "': " + e.what());
  }
}

FiniteRpoGroup parse_group(const Json& j) {
  if (!j.is_object()) throw structural_error("group must be a JSON object");
  int order = field(j, "order").get<int>();
  const Json& jt = field(j, "table");
  if (!jt.is_array() || static_cast<int>(jt.size()) != order)
    throw structural_error("table height differs from the declared order");
  std::vector<std::vector<Elem>> table;
  for (const auto& row : jt) table.push_back(int_array(row, "table row"));
  std::string name = j.value("name", std::string("group"));
  std::vector<Elem> cone_members = int_array(field(j, "cone"), "cone");

  FiniteGroup grp(name, std::move(table));
  // normalize the identity to index 0
  Elem id = -1;
  for (Elem e = 0; e < grp.order() && id < 0; ++e) {
    bool ok = true;
    for (Elem x = 0; x < grp.order() && ok; ++x)
      ok = grp.op(e, x) == x && grp.op(x, e) == x;
    if (ok) id = e;
  }
  std::vector<Elem> relabel(grp.order());
  for (Elem i = 0; i < grp.order(); ++i) relabel[i] = i;
  if (id > 0) {
    std::swap(relabel[0], relabel[id]);
    std::vector<std::vector<Elem>> t2(grp.order(),
                                      std::vector<Elem>(grp.order()));
    for (Elem a = 0; a < grp.order(); ++a)
      for (Elem b = 0; b < grp.order(); ++b)
        t2[a][b] = relabel[grp.op(relabel[a], relabel[b])];
    std::vector<std::string> names(grp.order());
    for (Elem a = 0; a < grp.order(); ++a)
      names[a] = grp.element_name(relabel[a]);
    grp = FiniteGroup(name, std::move(t2), std::move(names));
  }
  Cone cone;
  for (Elem c : cone_members) {
    if (c < 0 || c >= grp.order())
      throw structural_error("cone element out of range in '" + name + "'");
    cone.add(relabel[c]);
  }
  return {std::move(grp), cone};
}

Json group_to_json(const FiniteRpoGroup& g, const std::string& name) {
  Json j;
  j["name"] = name;
  j["order"] = g.order();
  j["table"] = g.group.table();
  j["cone"] = g.cone.members();
  return j;
}

Workspace Workspace::from_json(const Json& doc) {
  Workspace ws;
  auto take = [&](const Json& j) {
    FiniteRpoGroup g = parse_group(j);
    ws.groups.emplace(j.value("name", std::string("group")), std::move(g));
  };
  if (doc.is_object() && doc.contains("groups"))
    for (const auto& j : doc["groups"]) take(j);
  else if (doc.is_object() && doc.contains("table"))
    take(doc);
  return ws;
}

FiniteRpoGroup Workspace::resolve_group(const std::string& name) const {
  if (auto it = groups.find(name); it != groups.end()) return it->second;
  if (auto g = catalog::rpo_by_name(name)) return *g;
  throw structural_error("unknown group '" + name +
                         "' (not in the file, not built in)");
}

RpoMorphism parse_morphism(const Json& j, const Workspace& ws) {
  FiniteRpoGroup dom = ws.resolve_group(field(j, "dom").get<std::string>());
  FiniteRpoGroup cod = ws.resolve_group(field(j, "cod").get<std::string>());
  return {std::move(dom), std::move(cod), int_array(field(j, "map"), "map")};
}

SplitPoint parse_point(const Json& j, const Workspace& ws) {
  FiniteRpoGroup total = ws.resolve_group(field(j, "total").get<std::string>());
  FiniteRpoGroup base = ws.resolve_group(field(j, "base").get<std::string>());
  SplitPoint p{total, base,
               RpoMorphism(total, base, int_array(field(j, "d"), "d")),
               RpoMorphism(base, total, int_array(field(j, "e"), "e"))};
  p.check();
  return p;
}

ReflexiveGraph parse_graph(const Json& j, const Workspace& ws) {
  FiniteRpoGroup apex = ws.resolve_group(field(j, "apex").get<std::string>());
  FiniteRpoGroup base = ws.resolve_group(field(j, "base").get<std::string>());
  ReflexiveGraph g{apex, base,
                   RpoMorphism(apex, base, int_array(field(j, "d"), "d")),
                   RpoMorphism(apex, base, int_array(field(j, "c"), "c")),
                   RpoMorphism(base, apex, int_array(field(j, "e"), "e"))};
  g.check();
  return g;
}

PrecrossedModule parse_pxmod(const Json& j, const Workspace& ws) {
  FiniteRpoGroup base = ws.resolve_group(field(j, "base").get<std::string>());
  FiniteRpoGroup ker = ws.resolve_group(field(j, "ker").get<std::string>());
  RpoMorphism boundary{ker, base,
                       int_array(field(j, "boundary"), "boundary")};
  const Json& ja = field(j, "act");
  std::vector<std::vector<Elem>> act;
  for (const auto& row : ja) act.push_back(int_array(row, "act row"));
  ActionMorphism action{base, ker, std::move(act)};
  return {std::move(base), std::move(ker), std::move(boundary),
          std::move(action)};
}

EffEqRelation parse_relation(const Json& j, const Workspace& ws) {
  const Json& jc = field(j, "carrier");
  FiniteRpoGroup carrier = jc.is_string()
                               ? ws.resolve_group(jc.get<std::string>())
                               : parse_group(jc);
  std::vector<std::vector<Elem>> classes;
  for (const auto& row : field(j, "partition"))
    classes.push_back(int_array(row, "partition class"));
  return EffEqRelation::from_partition(carrier, classes);
}

SigmaAlgebra parse_algebra(const Json& j) {
  SigmaAlgebra m;
  m.n = field(j, "carrier").get<int>();
  m.zero = field(j, "zero").get<Elem>();
  for (const auto& row : field(j, "plus"))
    m.plus.push_back(int_array(row, "plus row"));
  m.neg = int_array(field(j, "neg"), "neg");
  m.proj0 = int_array(field(j, "proj0"), "proj0");
  m.proj1 = int_array(field(j, "proj1"), "proj1");
  m.inj = int_array(field(j, "inj"), "inj");
  if (j.contains("tri")) m.tri = int_array(j["tri"], "tri");
  m.check_shape();
  return m;
}

SubobjectPairInput parse_subobject_pair(const Json& j, const Workspace& ws) {
  const Json& jc = field(j, "carrier");
  FiniteRpoGroup carrier = jc.is_string()
                               ? ws.resolve_group(jc.get<std::string>())
                               : parse_group(jc);
  auto sub = [&](const Json& js) -> NormalSubobject {
    ElemSet s = ElemSet::of(int_array(field(js, "subgroup"), "subgroup"));
    return {s, s & carrier.cone};
  };
  return {carrier, sub(field(j, "x")), sub(field(j, "y"))};
}

namespace {

Sym parse_sym_value(const Json& j) {
  if (j.is_number_integer()) return Sym::integer(j.get<long long>());
  if (j.is_string()) return Sym::rational(rat_parse(j.get<std::string>()));
  if (j.is_array()) {
    std::vector<Sym> items;
    for (const auto& x : j) items.push_back(parse_sym_value(x));
    return Sym::tuple(std::move(items));
  }
  throw structural_error("element value must be an integer, a 'p/q' string "
                         "or an array of components");
}

}  // namespace

SymExpr parse_witness_expr(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string())
    throw structural_error("expression must be [op, args...]");
  std::string op = j[0].get<std::string>();
  if (op == "elem") {
    if (j.size() != 2) throw structural_error("elem takes one value");
    return SymExpr::elem(parse_sym_value(j[1]));
  }
  if (op == "neg") {
    if (j.size() != 2) throw structural_error("neg takes one argument");
    return SymExpr::neg(parse_witness_expr(j[1]));
  }
  if (op == "add") {
    if (j.size() < 3) throw structural_error("add takes two or more arguments");
    SymExpr acc = parse_witness_expr(j[1]);
    for (size_t i = 2; i < j.size(); ++i)
      acc = SymExpr::add(std::move(acc), parse_witness_expr(j[i]));
    return acc;
  }
  throw structural_error("unknown expression operation '" + op + "'");
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["law"] = v.law;
  if (!v.detail.empty()) j["detail"] = v.detail;
  Json w = Json::array();
  for (const Binding& b : v.witness) {
    Json e;
    e["name"] = b.name;
    e["value"] = b.value;
    if (b.index >= 0) e["index"] = b.index;
    w.push_back(std::move(e));
  }
  j["witness"] = std::move(w);
  return j;
}

}  // namespace rpog
