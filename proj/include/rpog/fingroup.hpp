#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rpog/verdict.hpp"

namespace rpog {

using Elem = int;

// Subsets of group elements are stored as 64-bit masks, which caps the
// order of a finite group.
inline constexpr int kMaxOrder = 64;

struct ElemSet {
  std::uint64_t bits = 0;

  static ElemSet single(Elem a) { return {std::uint64_t{1} << a}; }
  static ElemSet full(int n);
  static ElemSet of(const std::vector<Elem>& xs);

  bool contains(Elem a) const { return bits >> a & 1; }
  void add(Elem a) { bits |= std::uint64_t{1} << a; }
  void remove(Elem a) { bits &= ~(std::uint64_t{1} << a); }
  int size() const;
  bool empty() const { return bits == 0; }
  bool subset_of(ElemSet o) const { return (bits & ~o.bits) == 0; }
  std::vector<Elem> members() const;
  Elem first() const;  // smallest member, -1 if empty

  friend ElemSet operator&(ElemSet a, ElemSet b) { return {a.bits & b.bits}; }
  friend ElemSet operator|(ElemSet a, ElemSet b) { return {a.bits | b.bits}; }
  friend ElemSet operator-(ElemSet a, ElemSet b) { return {a.bits & ~b.bits}; }
  friend bool operator==(ElemSet a, ElemSet b) = default;
  friend std::strong_ordering operator<=>(ElemSet a, ElemSet b) = default;
};

// A positive cone: a submonoid of the group containing the identity.
using Cone = ElemSet;

// A finite group presented by its Cayley table, table[a][b] = a+b.  The
// constructor checks shape and index ranges only (structural_error
// otherwise); the group laws themselves are the business of validate().
// By convention the identity is element 0 in every catalog group and
// every normalized input.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::string name, std::vector<std::vector<Elem>> table,
              std::vector<std::string> element_names = {});

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }

  Elem op(Elem a, Elem b) const { return table_[a][b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem sub(Elem a, Elem b) const { return op(a, inv(b)); }          // a - b
  Elem conj(Elem x, Elem a) const { return op(op(x, a), inv(x)); }  // x + a - x
  bool has_inverses() const;

  const std::vector<std::vector<Elem>>& table() const { return table_; }
  const std::string& element_name(Elem a) const { return elem_names_[a]; }
  const std::vector<std::string>& element_names() const { return elem_names_; }
  void set_element_names(std::vector<std::string> names);

  // Law-assuming helpers, meaningful once validate() holds.
  ElemSet closure(ElemSet seed) const;      // submonoid generated by seed
  std::vector<ElemSet> submonoids() const;  // all submonoids, sorted
  std::vector<ElemSet> normal_subgroups() const;
  bool is_submonoid(ElemSet s) const;
  bool is_normal(ElemSet s) const;
  ElemSet center() const;
  ElemSet full_set() const { return ElemSet::full(n_); }
  // Greedy generating sequence: repeatedly adjoin the smallest element
  // outside the closure so far.  Deterministic.
  std::vector<Elem> generating_sequence() const;

 private:
  int n_ = 0;
  std::string name_;
  std::vector<std::vector<Elem>> table_;
  std::vector<Elem> inv_;  // -1 where no inverse exists in the raw table
  std::vector<std::string> elem_names_;
};

// A right-preordered group: a finite group together with a positive cone.
struct FiniteRpoGroup {
  FiniteGroup group;
  Cone cone;

  int order() const { return group.order(); }
  std::string display_name() const;
  std::string cone_text() const;  // "{id,(12)(34)}"
};

// A map between right-preordered groups: one codomain index per domain
// element.  Construction checks lengths and ranges only.
struct RpoMorphism {
  FiniteRpoGroup dom;
  FiniteRpoGroup cod;
  std::vector<Elem> map;

  RpoMorphism() = default;
  RpoMorphism(FiniteRpoGroup dom_, FiniteRpoGroup cod_, std::vector<Elem> map_);

  Elem operator()(Elem a) const { return map[a]; }
  ElemSet image() const;
  bool injective() const;

  static RpoMorphism identity(const FiniteRpoGroup& g);
  static RpoMorphism constant_zero(const FiniteRpoGroup& dom_,
                                   const FiniteRpoGroup& cod_);
};

// f after g (domains must line up).
RpoMorphism compose(const RpoMorphism& f, const RpoMorphism& g);

// Renumber a subgroup as a standalone group: identity first, parent order
// otherwise.  Element names are inherited.
struct SubgroupPresentation {
  FiniteGroup group;
  std::vector<Elem> embed;     // new index -> parent index
  std::vector<Elem> position;  // parent index -> new index, -1 outside
};
SubgroupPresentation subgroup_as_group(const FiniteGroup& parent,
                                       ElemSet members, std::string name);

struct QuotientPresentation {
  FiniteGroup group;
  std::vector<Elem> proj;  // parent index -> coset index
};
QuotientPresentation quotient_group(const FiniteGroup& parent,
                                    ElemSet normal_subgroup, std::string name);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

std::optional<Elem> element_by_name(const FiniteGroup& g,
                                    const std::string& name);

}  // namespace rpog
