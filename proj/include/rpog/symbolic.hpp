#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rpog/rational.hpp"
#include "rpog/verdict.hpp"

namespace rpog {

// Exact element value: integer, rational, nonzero rational, or a tuple
// of values.  Rationals are kept in lowest terms; the nonzero tag
// rejects zero at construction.
class Sym {
 public:
  enum class Kind { Int, Rat, NonzeroRat, Tuple };

  Sym() = default;
  static Sym integer(long long v);
  static Sym rational(Rat q);
  static Sym nonzero(Rat q);  // structural_error on zero
  static Sym tuple(std::vector<Sym> items);

  Kind kind() const { return kind_; }
  const Rat& q() const { return q_; }
  const std::vector<Sym>& items() const { return items_; }
  bool is_tuple() const { return kind_ == Kind::Tuple; }

  std::string text() const;  // "(3,1/2)"

  // scalar comparison ignores the tag; tuples compare lexicographically
  friend bool operator==(const Sym& a, const Sym& b);
  friend bool operator<(const Sym& a, const Sym& b);

 private:
  Kind kind_ = Kind::Int;
  Rat q_{0};
  std::vector<Sym> items_;
};

struct Domain {
  Sym::Kind kind = Sym::Kind::Int;
  std::vector<Domain> components;  // nonempty marks a tuple domain

  bool contains(const Sym& v) const;
  static Domain integers() { return {Sym::Kind::Int, {}}; }
  static Domain rationals() { return {Sym::Kind::Rat, {}}; }
  static Domain nonzero_rationals() { return {Sym::Kind::NonzeroRat, {}}; }
  static Domain tuple(std::vector<Domain> cs) {
    return {Sym::Kind::Tuple, std::move(cs)};
  }
};

// A group on an exact-arithmetic domain: operations as total functions.
struct SymbolicGroup {
  std::string name;
  Domain domain;
  Sym id;
  std::function<Sym(const Sym&, const Sym&)> op;
  std::function<Sym(const Sym&)> inv;
  bool abelian = false;

  Sym sub(const Sym& a, const Sym& b) const { return op(a, inv(b)); }
};

// Group plus a cone membership predicate and deterministic samplers.
// Boundary elements are always fed into every sampled check.
struct SymbolicRpoGroup {
  SymbolicGroup group;
  std::function<bool(const Sym&)> cone;
  std::function<Sym(std::mt19937_64&)> draw;       // from the domain
  std::function<Sym(std::mt19937_64&)> draw_cone;  // from the cone
  std::vector<Sym> boundary;
};

// Group-law and cone-closure checks on n sampled tuples plus every
// boundary element.  A violation is a genuine counterexample; a holding
// verdict is labeled as sampled.
Verdict sampled_validate(const SymbolicRpoGroup& g, unsigned seed, int n);

// Element expressions in prefix form, for replaying recorded values.
struct SymExpr {
  enum class Tag { Element, Add, Neg };
  Tag tag = Tag::Element;
  Sym value;
  std::vector<SymExpr> args;

  static SymExpr elem(Sym v);
  static SymExpr add(SymExpr a, SymExpr b);
  static SymExpr neg(SymExpr a);
};

struct WitnessEval {
  Sym value;
  bool in_cone = false;
};
WitnessEval eval_witness(const SymExpr& e, const SymbolicRpoGroup& g);

// Morphism with enough structure to decide the normal-monomorphism
// question on samples: image membership and a section of the map.
struct SymbolicMorphism {
  SymbolicRpoGroup dom, cod;
  std::function<Sym(const Sym&)> map;
  std::function<bool(const Sym&)> image_contains;
  std::function<Sym(const Sym&)> preimage;  // defined on the image
};
Verdict sym_is_normal_mono(const SymbolicMorphism& f, unsigned seed, int n);

// Reflexive graph over symbolic objects, with samplers for composable
// pairs (d of the first leg equals c of the second).
struct SymbolicGraph {
  SymbolicRpoGroup apex, base;
  std::function<Sym(const Sym&)> d, c, e;
  std::function<std::pair<Sym, Sym>(std::mt19937_64&)> draw_composable;
  std::function<std::pair<Sym, Sym>(std::mt19937_64&)> draw_composable_cone;
  std::vector<std::pair<Sym, Sym>> boundary_composable;
  std::string note;
};

Sym graph_m(const SymbolicGraph& g, const Sym& a, const Sym& b);
Sym graph_sigma(const SymbolicGraph& g, const Sym& a);

Verdict sym_is_schreier(const SymbolicGraph& g, unsigned seed, int n);
Verdict sym_is_internal_category(const SymbolicGraph& g, unsigned seed, int n);
// Requires the sampled category check to hold (precondition error
// otherwise).
Verdict sym_is_groupoid(const SymbolicGraph& g, unsigned seed, int n);

struct SymbolicCenterResult {
  bool refused = false;
  Verdict verdict;           // refusal carries the no-inverse witness
  std::string description;   // the center, when defined
};
SymbolicCenterResult sym_s_center(const SymbolicRpoGroup& g, unsigned seed,
                                  int n);

// Small-height rational draw shared by the registry samplers.
Rat draw_small_rat(std::mt19937_64& rng, int height, bool nonzero);

}  // namespace rpog
