// Finite posets, their nerves, and the mapping posets P_{i,j} of subsets of
// the interval [i, j] containing both endpoints, composed by union.
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qckit/sset.hpp"

namespace qckit {

class FinPoset {
 public:
  FinPoset() = default;
  /// `leq` lists generating pairs (a <= b); the reflexive-transitive closure
  /// is taken. Throws ValidationError if the closure is not antisymmetric.
  FinPoset(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& leq);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int a) const { return names_[static_cast<std::size_t>(a)]; }
  std::span<const std::string> names() const { return names_; }
  bool leq(int a, int b) const { return order_[static_cast<std::size_t>(a * size() + b)]; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  /// Number of elements in a longest strict chain.
  int longest_chain() const;
  /// All pairs a <= b, a != b.
  std::vector<std::pair<int, int>> strict_pairs() const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> order_;
};

/// The nerve of a finite poset with its chain bookkeeping. Nondegenerate
/// m-cells are strict chains x_0 < ... < x_m; face i drops x_i.
class PosetNerve {
 public:
  PosetNerve() = default;
  /// `truncation` < 0 selects longest_chain() - 1, so nothing is lost.
  explicit PosetNerve(FinPoset poset, int truncation = -1);

  const FinPoset& poset() const { return poset_; }
  const SSetPtr& sset() const { return sset_; }
  /// The strict chain of a cell, as element indices.
  const std::vector<int>& chain(CellId c) const { return chains_[static_cast<std::size_t>(c)]; }
  /// A weakly increasing sequence of elements as a normalized simplex.
  SimplexRef simplex_of(std::span<const int> weak_chain) const;
  /// The weakly increasing element sequence of a simplex.
  std::vector<int> elements_of(const SimplexRef& s) const;

 private:
  FinPoset poset_;
  SSetPtr sset_;
  std::vector<std::vector<int>> chains_;
  std::map<std::vector<int>, CellId> chain_cell_;
};

inline PosetNerve nerve(const FinPoset& P, int truncation = -1) { return PosetNerve(P, truncation); }

/// A subset of [k] as a bitmask.
using Subset = std::uint32_t;

std::string subset_name(Subset s);
Subset image_subset(const MonotoneMap& f, Subset s);

/// P_{i,j} inside [k]: subsets I of {i,...,j} with i, j in I, ordered by
/// inclusion. Empty when i > j.
struct MappingPoset {
  int i{0}, j{0}, k{0};
  /// Sorted by size, then numerically; front() is {i,j}, back() is {i..j}.
  std::vector<Subset> elements;

  int index_of(Subset s) const;
  FinPoset poset() const;
};

MappingPoset mapping_poset(int i, int j, int k);

/// The nerve of a mapping poset, addressed by subsets.
class MappingNerve {
 public:
  /// `truncation` < 0 keeps the default (longest chain); larger values make
  /// room for degenerate simplices of higher dimension.
  MappingNerve(int i, int j, int k, int truncation = -1);

  const MappingPoset& mapping_poset() const { return poset_; }
  const PosetNerve& nerve() const { return nerve_; }
  const SSetPtr& sset() const { return nerve_.sset(); }
  SimplexRef simplex_of(std::span<const Subset> weak_chain) const;
  std::vector<Subset> subsets_of(const SimplexRef& s) const;

 private:
  MappingPoset poset_;
  PosetNerve nerve_;
};

/// N(P_{j,p}) x N(P_{i,j}) -> N(P_{i,p}), (J, I) -> J u I levelwise.
BilevelMap union_compose(const MappingNerve& jp, const MappingNerve& ij, const MappingNerve& ip);
BilevelMap union_compose(int i, int j, int p, int k);

/// The map P_{i,j} -> P_{f(i),f(j)}, I -> f(I), for f: [l] -> [k], and its nerve.
struct PosetImage {
  std::vector<int> element_map;
  SimplicialMap nerve_map;
};
PosetImage poset_map_image(const MonotoneMap& f, const MappingNerve& source, const MappingNerve& target);
PosetImage poset_map_image(const MonotoneMap& f, int i, int j);

}  // namespace qckit
