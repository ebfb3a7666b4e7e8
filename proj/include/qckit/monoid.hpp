// Finite graded simplicial monoids: a grade monoid with one cyclic-group
// nerve per grade, its one-object delooping, and the coslice/core pipeline
// that recovers the monoid.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qckit/enriched.hpp"
#include "qckit/presheaf.hpp"
#include "qckit/sset.hpp"

namespace qckit {

/// A finite monoid given by its multiplication table.
struct GradeMonoid {
  std::vector<std::string> elements;
  int unit{0};
  /// table[a][b] = a * b.
  std::vector<std::vector<int>> table;

  int size() const { return static_cast<int>(elements.size()); }
  int mul(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int index_of(const std::string& name) const;
};

/// Associativity, unit laws, and that left translation by m is a bijection
/// only for m = unit.
ValidationReport validate(const GradeMonoid& G);

/// Saturating addition on {0, 1, ..., top-1, top+}.
GradeMonoid saturating_addition(int top);

/// The nerve of Z/n truncated at `truncation`. Nondegenerate k-cells are
/// k-tuples of nonzero elements; Z/1 gives the point.
FinSSet cyclic_group_nerve(int n, int truncation);

/// Spec of a graded simplicial monoid. components[g] is the order of the
/// cyclic group whose nerve sits over grade g (1 means a point).
struct MonoidSpec {
  GradeMonoid grades;
  std::vector<int> components;
  int truncation{3};
};

/// {0, 1, 2+} under saturating addition, Z/2 over the positive grades.
MonoidSpec default_monoid_spec();

class GradedSimplicialMonoid {
 public:
  /// A k-simplex of the total space: a grade and a k-tuple in its group.
  struct Key {
    int grade{0};
    std::vector<int> tuple;
    friend auto operator<=>(const Key&, const Key&) = default;
    friend bool operator==(const Key&, const Key&) = default;
  };

  /// Throws ValidationError on specs that fail validate(GradeMonoid), have a
  /// non-point unit component, or whose product is not associative.
  explicit GradedSimplicialMonoid(MonoidSpec spec);

  const MonoidSpec& spec() const { return spec_; }
  const GradeMonoid& grades() const { return spec_.grades; }
  int truncation() const { return spec_.truncation; }
  int group_order(int grade) const { return spec_.components[static_cast<std::size_t>(grade)]; }

  /// The disjoint union of the components; cells are named by grade
  /// ("2+") or grade and tuple ("1/1,1").
  const SSetPtr& total() const { return model_.sset; }
  /// Component over one grade, as its own simplicial set.
  FinSSet component(int grade) const;

  Key key_of(const SimplexRef& s) const;
  SimplexRef simplex_of(const Key& k) const;
  int grade_of(const SimplexRef& s) const { return key_of(s).grade; }
  /// The unit vertex.
  CellId unit() const;

  /// Levelwise graded product; a (x) b.
  Key product(const Key& a, const Key& b) const;
  SimplexRef product(const SimplexRef& a, const SimplexRef& b) const;
  BilevelMap product_map() const;

  /// Associativity and units of the product on every level up to `max_level`.
  ValidationReport validate_product(int max_level) const;

 private:
  MonoidSpec spec_;
  PresheafModel<Key> model_;
};

/// The one-object simplicial category with endomorphisms the total space.
SCat deloop(const GradedSimplicialMonoid& M);

/// Discrete monoid as a graded simplicial monoid with point components.
MonoidSpec discrete_monoid_spec(GradeMonoid G, int truncation);

}  // namespace qckit
