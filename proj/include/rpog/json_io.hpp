#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "rpog/internal.hpp"
#include "rpog/sigma.hpp"
#include "rpog/subobjects.hpp"
#include "rpog/symbolic.hpp"

namespace rpog {

using Json = nlohmann::json;

// Parse failures surface as structural_error with the parser's
// line/field diagnostics in the message.
Json load_json_file(const std::string& path);

// Named objects available to references inside one input file; names
// not found here fall back to the built-in registry.
struct Workspace {
  std::map<std::string, FiniteRpoGroup> groups;

  static Workspace from_json(const Json& doc);
  FiniteRpoGroup resolve_group(const std::string& name) const;
};

// {"name": str, "order": n, "table": [[int;n];n], "cone": [int,...]}
// The identity is normalized to index 0 on load.
FiniteRpoGroup parse_group(const Json& j);
Json group_to_json(const FiniteRpoGroup& g, const std::string& name);

// {"dom": name, "cod": name, "map": [int,...]}
RpoMorphism parse_morphism(const Json& j, const Workspace& ws);

// {"total": name, "base": name, "d": [int,...], "e": [int,...]}
SplitPoint parse_point(const Json& j, const Workspace& ws);

// {"apex": name, "base": name, "d": [...], "c": [...], "e": [...]}
ReflexiveGraph parse_graph(const Json& j, const Workspace& ws);

// {"base": name, "ker": name, "boundary": [...], "act": [[int,...],...]}
PrecrossedModule parse_pxmod(const Json& j, const Workspace& ws);

// {"carrier": name, "partition": [[int,...],...]};
// cone pairs are recomputed, never read.
EffEqRelation parse_relation(const Json& j, const Workspace& ws);

// {"carrier": n, "zero": int, "plus": [[int]], "neg": [int],
//  "proj0": [int], "proj1": [int], "inj": [int], "tri": [int]?}
SigmaAlgebra parse_algebra(const Json& j);

// {"carrier": name, "x": {"subgroup": [...]}, "y": {"subgroup": [...]}}
struct SubobjectPairInput {
  FiniteRpoGroup carrier;
  NormalSubobject x, y;
};
SubobjectPairInput parse_subobject_pair(const Json& j, const Workspace& ws);

// ["add", e1, e2] | ["neg", e] | ["elem", v] with v an integer, a
// "p/q" string, or an array of components.
SymExpr parse_witness_expr(const Json& j);

Json verdict_to_json(const Verdict& v);

}  // namespace rpog
