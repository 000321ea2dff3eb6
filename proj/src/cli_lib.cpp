#include "rpog/cli_lib.hpp"

#include <filesystem>
#include <sstream>

#include "rpog/catalog.hpp"
#include "rpog/json_io.hpp"
#include "rpog/registry.hpp"

namespace rpog {

namespace {

std::string verdict_line(const std::string& key, const Verdict& v) {
  std::string line = key + ": " + (v.holds ? "YES" : "NO");
  if (!v.witness.empty()) line += " (witness " + v.witness_text() + ")";
  if (!v.detail.empty())
    line += v.witness.empty() ? " (" + v.detail + ")" : " [" + v.detail + "]";
  return line;
}

struct Emitter {
  bool json;
  std::ostringstream text;
  Json doc = Json::object();

  explicit Emitter(const RunConfig& cfg) : json(cfg.format == "json") {
    doc["results"] = Json::array();
  }
  void line(const std::string& s) { text << s << "\n"; }
  void verdict(const std::string& key, const Verdict& v) {
    if (json) {
      Json e = verdict_to_json(v);
      e["key"] = key;
      doc["results"].push_back(std::move(e));
    } else {
      line(verdict_line(key, v));
    }
  }
  void note(const std::string& key, const std::string& value) {
    if (json)
      doc[key] = value;
    else
      line(key + ": " + value);
  }
  std::string str() {
    if (json) return doc.dump(2) + "\n";
    return text.str();
  }
};

// A path argument may be a JSON file or a built-in object name.
struct LoadedDoc {
  Json doc;
  Workspace ws;
  bool builtin = false;
  std::string builtin_name;
};

LoadedDoc load_arg(const std::string& arg) {
  if (!std::filesystem::exists(arg)) {
    if (catalog::rpo_by_name(arg)) return {Json{}, Workspace{}, true, arg};
    throw structural_error("no such file or built-in object: '" + arg + "'");
  }
  Json doc = load_json_file(arg);
  Workspace ws = Workspace::from_json(doc);
  return {std::move(doc), std::move(ws), false, ""};
}

FiniteRpoGroup group_from_arg(const LoadedDoc& d) {
  if (d.builtin) return *catalog::rpo_by_name(d.builtin_name);
  if (d.doc.contains("table")) return parse_group(d.doc);
  if (d.doc.contains("groups") && !d.doc["groups"].empty())
    return parse_group(d.doc["groups"][0]);
  throw structural_error("input holds no group object");
}

void guard_order(const FiniteRpoGroup& g, const RunConfig& cfg) {
  if (g.order() > cfg.max_order)
    throw precondition_error("order " + std::to_string(g.order()) +
                             " exceeds --max-order " +
                             std::to_string(cfg.max_order));
}

int cmd_validate(const RunConfig& cfg, Emitter& em) {
  LoadedDoc d = load_arg(cfg.paths.at(0));
  FiniteRpoGroup g = group_from_arg(d);
  guard_order(g, cfg);
  em.note("object", g.display_name());
  em.verdict("validate", validate(g));
  return kOk;
}

int cmd_check(const RunConfig& cfg, Emitter& em) {
  const std::string& kind = cfg.kind;
  LoadedDoc d = load_arg(cfg.paths.at(0));

  if (kind == "preordered") {
    FiniteRpoGroup g = group_from_arg(d);
    guard_order(g, cfg);
    if (Verdict v = validate(g); !v)
      throw precondition_error("input fails validation: " + v.law);
    em.verdict("preordered", is_preordered(g));
    return kOk;
  }
  if (kind == "lattice") {
    FiniteRpoGroup g = group_from_arg(d);
    guard_order(g, cfg);
    NormalLattice l = normal_lattice(g);
    em.note("elements", std::to_string(l.elements.size()));
    em.verdict("lattice-iso", check_lattice_iso(g));
    return kOk;
  }
  if (kind == "modular") {
    FiniteRpoGroup g = group_from_arg(d);
    guard_order(g, cfg);
    NormalLattice l = normal_lattice(g);
    Verdict v = check_modular(l.to_lattice());
    v.detail = std::to_string(l.elements.size()) + "-element lattice";
    em.verdict("modular", v);
    return kOk;
  }
  if (kind == "s-center") {
    if (!d.builtin || !build_example(d.builtin_name)) {
      FiniteRpoGroup g = group_from_arg(d);
      guard_order(g, cfg);
      NormalSubobject z = s_center(g);
      std::string elems;
      for (Elem a : z.subgroup.members()) {
        if (!elems.empty()) elems += ",";
        elems += g.group.element_name(a);
      }
      em.note("center", "{" + elems + "}");
      em.verdict("s-center", Verdict::yes("cone-group"));
      return kOk;
    }
    // symbolic registry object
    auto obj = build_example(d.builtin_name);
    const auto* rg = std::get_if<SymbolicRpoGroup>(&*obj);
    if (!rg)
      throw precondition_error("'" + d.builtin_name +
                               "' is not a right-preordered group");
    SymbolicCenterResult r = sym_s_center(*rg, cfg.seed, cfg.samples);
    if (!r.description.empty()) em.note("center", r.description);
    em.verdict("s-center", r.verdict);
    return kOk;
  }
  if (kind == "schreier") {
    SplitPoint p = parse_point(d.doc, d.ws);
    guard_order(p.total, cfg);
    em.verdict("schreier", is_schreier(p));
    PointClassification cl = classify_point(p);
    em.note("cone-is-product", cl.is_prod ? "YES" : "NO");
    return kOk;
  }
  if (kind == "category" || kind == "groupoid") {
    ReflexiveGraph g = parse_graph(d.doc, d.ws);
    guard_order(g.apex, cfg);
    if (kind == "category") {
      em.verdict("category", is_internal_category(g));
    } else {
      em.verdict("groupoid", is_groupoid(g));
    }
    return kOk;
  }
  if (kind == "axioms") {
    SigmaAlgebra m = parse_algebra(d.doc);
    AxiomReport rep = check_axioms(m);
    for (const auto& [k, v] : rep.axioms) em.verdict(k, v);
    if (!m.tri && rep.all_hold()) {
      ExtendResult ext = extend_to_pog(m);
      em.verdict("extends", ext.verdict);
    }
    return kOk;
  }
  if (kind == "effective") {
    if (d.doc.contains("apex")) {
      ReflexiveGraph g = parse_graph(d.doc, d.ws);
      guard_order(g.apex, cfg);
      em.verdict("effective", is_effective(g));
      return kOk;
    }
    RpoMorphism boundary = parse_morphism(
        d.doc.contains("boundary") ? d.doc["boundary"] : d.doc, d.ws);
    if (Verdict v = check_morphism(boundary); !v)
      throw precondition_error("boundary is not a morphism: " + v.law);
    ElemSet cone = effective_relation_cone(boundary);
    em.note("cone-size", std::to_string(cone.size()));
    ReflexiveGraph g = relation_graph(boundary, cone);
    em.verdict("effective", is_effective(g));
    return kOk;
  }
  if (kind == "action-rep") {
    if (cfg.paths.size() < 2)
      throw structural_error("action-rep needs two objects");
    LoadedDoc d2 = load_arg(cfg.paths.at(1));
    FiniteRpoGroup x = group_from_arg(d);
    FiniteRpoGroup y = group_from_arg(d2);
    ActionRepReport rep = check_action_rep(x, y);
    em.note("morphisms", std::to_string(rep.morphism_count));
    em.note("extension-classes", std::to_string(rep.extension_count));
    em.verdict("action-rep", rep.verdict);
    return kOk;
  }
  if (kind == "smith") {
    if (cfg.paths.size() < 2) throw structural_error("smith needs two relations");
    LoadedDoc d2 = load_arg(cfg.paths.at(1));
    EffEqRelation r = parse_relation(d.doc, d.ws);
    EffEqRelation s = parse_relation(d2.doc, d2.ws.groups.empty() ? d.ws : d2.ws);
    em.verdict("smith", smith_commute(r, s));
    em.verdict("huq-of-normalizations",
               huq_commute(r.carrier, normalization(r), normalization(s)));
    return kOk;
  }
  if (kind == "huq") {
    SubobjectPairInput in = parse_subobject_pair(d.doc, d.ws);
    em.verdict("huq", huq_commute(in.carrier, in.x, in.y));
    return kOk;
  }
  throw structural_error("unknown check kind '" + kind + "'");
}

int cmd_example(const RunConfig& cfg, Emitter& em) {
  auto bundle = example_bundle(cfg.paths.at(0));
  if (!bundle) throw structural_error("unknown example '" + cfg.paths.at(0) + "'");
  em.note("example", bundle->id + ": " + bundle->title);
  bool all_match = true;
  for (const ExampleCheck& c : bundle->checks) {
    Verdict v = c.run(cfg.seed, cfg.samples);
    bool match = v.holds == c.expected;
    if (c.replay_witness) {
      auto replay = c.replay_witness();
      if (!replay) {
        match = false;
        em.note(c.key + "-recorded", "recorded witness failed to re-evaluate");
      } else {
        em.note(c.key + "-recorded", *replay);
      }
    }
    em.verdict(c.key, v);
    if (!match) {
      all_match = false;
      em.note(c.key + "-expected", c.expected ? "YES" : "NO");
    }
  }
  em.note("result", all_match ? "MATCH" : "MISMATCH");
  return all_match ? kOk : kMismatch;
}

int cmd_census(const RunConfig& cfg, Emitter& em) {
  int max_order = 12;
  if (!cfg.paths.empty()) max_order = std::stoi(cfg.paths.at(0));
  if (max_order < 1 || max_order > 12)
    throw precondition_error("census supports orders 1 to 12");

  long totals[6] = {0, 0, 0, 0, 0, 0};
  Json rows = Json::array();
  for (const FiniteGroup& grp : catalog::groups_upto(max_order)) {
    std::vector<Cone> cones = enumerate_cones(grp);
    long points = 0, schreier = 0, graphs = 0, categories = 0, groupoids = 0;
    for (const Cone& cone : cones) {
      FiniteRpoGroup g{grp, cone};
      for (const SplitPoint& p : enumerate_split_points(g)) {
        ++points;
        if (is_schreier(p)) ++schreier;
        // reflexive graphs on this point: monotone c with c e = id
        for (const RpoMorphism& c : monotone_morphisms(p.total, p.base)) {
          bool splits = true;
          for (Elem x = 0; x < p.base.order() && splits; ++x)
            splits = c.map[p.e.map[x]] == x;
          if (!splits) continue;
          ++graphs;
          ReflexiveGraph rg{p.total, p.base, p.d, c, p.e};
          if (is_internal_category(rg)) {
            ++categories;
            if (is_groupoid(rg)) ++groupoids;
          }
        }
      }
    }
    if (em.json) {
      Json row;
      row["group"] = grp.name();
      row["order"] = grp.order();
      row["cones"] = cones.size();
      row["points"] = points;
      row["schreier"] = schreier;
      row["graphs"] = graphs;
      row["categories"] = categories;
      row["groupoids"] = groupoids;
      rows.push_back(std::move(row));
    } else {
      em.line(grp.name() + " order=" + std::to_string(grp.order()) +
              " cones=" + std::to_string(cones.size()) +
              " points=" + std::to_string(points) +
              " schreier=" + std::to_string(schreier) +
              " graphs=" + std::to_string(graphs) +
              " categories=" + std::to_string(categories) +
              " groupoids=" + std::to_string(groupoids));
    }
    totals[0] += static_cast<long>(cones.size());
    totals[1] += points;
    totals[2] += schreier;
    totals[3] += graphs;
    totals[4] += categories;
    totals[5] += groupoids;
  }
  if (em.json) {
    em.doc["census"] = std::move(rows);
  }
  em.note("total",
          "cones=" + std::to_string(totals[0]) +
              " points=" + std::to_string(totals[1]) +
              " schreier=" + std::to_string(totals[2]) +
              " graphs=" + std::to_string(totals[3]) +
              " categories=" + std::to_string(totals[4]) +
              " groupoids=" + std::to_string(totals[5]));
  return kOk;
}

}  // namespace

RunResult run_command(const RunConfig& cfg) {
  Emitter em(cfg);
  int code = kOk;
  try {
    if (cfg.command == "validate")
      code = cmd_validate(cfg, em);
    else if (cfg.command == "check")
      code = cmd_check(cfg, em);
    else if (cfg.command == "example")
      code = cmd_example(cfg, em);
    else if (cfg.command == "census")
      code = cmd_census(cfg, em);
    else {
      em.note("error", "unknown command '" + cfg.command + "'");
      code = kBadInput;
    }
  } catch (const structural_error& e) {
    em.note("error", e.what());
    code = kBadInput;
  } catch (const precondition_error& e) {
    em.note("error", e.what());
    code = kGuard;
  } catch (const std::exception& e) {
    em.note("error", e.what());
    code = kFailure;
  }
  return {code, em.str()};
}

}  // namespace rpog
