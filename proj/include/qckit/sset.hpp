// Finite, dimension-truncated simplicial sets.
//
// A FinSSet stores its nondegenerate cells and, for every cell of dimension
// m >= 1, its m+1 faces. Arbitrary (possibly degenerate) simplices are
// SimplexRefs in Eilenberg-Zilber normal form: a surjection [n] ->> [m]
// applied to a nondegenerate m-cell. All operations are exact up to the
// truncation and refuse to go above it.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qckit/ordinal.hpp"

namespace qckit {

class TruncationError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

using CellId = std::int32_t;

/// A simplex in normal form: `epi` applied to the nondegenerate `cell`.
struct SimplexRef {
  MonotoneMap epi;
  CellId cell{0};

  int dim() const { return epi.source_arity(); }
  bool is_nondegenerate() const { return epi.is_identity(); }

  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

struct SimplexRefHash {
  std::size_t operator()(const SimplexRef& s) const noexcept {
    return s.epi.hash() * 1000003u + static_cast<std::size_t>(s.cell);
  }
};

class FinSSet {
 public:
  /// The empty simplicial set truncated at 0.
  FinSSet() = default;

  int truncation() const { return truncation_; }
  /// Nondegenerate cells of dimension `dim`; empty for dim < 0. Throws
  /// TruncationError above the truncation.
  std::span<const CellId> cells(int dim) const;
  std::size_t cell_count() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  int dim(CellId c) const { return cell(c).dim; }
  const std::string& name(CellId c) const { return cell(c).name; }
  std::span<const SimplexRef> faces(CellId c) const { return cell(c).faces; }
  /// The nondegenerate simplex represented by `c`.
  SimplexRef simplex(CellId c) const { return {MonotoneMap::identity(dim(c)), c}; }

  std::optional<CellId> find(std::string_view name) const;
  /// Like find, but throws ValidationError for unknown names.
  CellId at(std::string_view name) const;

  /// Per-dimension nondegenerate cell counts, dimensions 0..truncation.
  std::vector<std::size_t> cell_counts() const;

  /// Structural equality: same truncation, same cells (by name, in order) and
  /// same face tables.
  friend bool operator==(const FinSSet& a, const FinSSet& b);

 private:
  friend class FinSSetBuilder;

  struct Cell {
    std::string name;
    int dim;
    std::vector<SimplexRef> faces;
  };
  const Cell& cell(CellId c) const;

  int truncation_{0};
  std::vector<std::vector<CellId>> by_dim_{1};
  std::vector<Cell> cells_;
  std::unordered_map<std::string, CellId> index_;
};

using SSetPtr = std::shared_ptr<const FinSSet>;

/// Single-threaded build-then-freeze construction of a FinSSet. Cells must be
/// added after every cell their faces refer to.
class FinSSetBuilder {
 public:
  explicit FinSSetBuilder(int truncation);

  CellId add_vertex(std::string name);
  /// Adds a cell of dimension faces.size() - 1. Throws on duplicate names,
  /// dangling references, dimension mismatch or dimension above truncation.
  CellId add_cell(std::string name, std::vector<SimplexRef> faces);
  std::size_t size() const { return set_.cells_.size(); }
  std::optional<CellId> find(std::string_view name) const { return set_.find(name); }

  FinSSet build() &&;

 private:
  FinSSet set_;
};

/// X(alpha)(s): the normalized image of s under the operator alpha.
SimplexRef apply_operator(const FinSSet& X, const SimplexRef& s, const MonotoneMap& alpha);
SimplexRef face(const FinSSet& X, const SimplexRef& s, int i);
SimplexRef degeneracy(const FinSSet& X, const SimplexRef& s, int i);
/// Vertex `v` of a simplex, as a vertex cell.
CellId vertex_of(const FinSSet& X, const SimplexRef& s, int v);

/// All k-simplices, degenerate ones included, each once, grouped by cell in
/// cell order and then by surjection in lexicographic order.
std::vector<SimplexRef> enumerate_simplices(const FinSSet& X, int k);

/// Human-readable form, e.g. "012" or "01@[0,0,1]".
std::string describe(const FinSSet& X, const SimplexRef& s);

FinSSet empty_sset(int truncation = 0);
/// The standard n-simplex; cells are the injections [m] -> [n], named by their
/// image ("0", "01", "013", ...). `truncation` defaults to n.
FinSSet standard_simplex(int n, int truncation = -1);
FinSSet boundary(int n);
/// The simplex f: [k] -> [n] of a standard simplex built by standard_simplex(n, ...).
SimplexRef standard_simplex_ref(const FinSSet& simplex, int n, const MonotoneMap& f);
FinSSet horn(int n, int i);
/// The sub-simplicial set of cells of dimension <= n.
FinSSet skeleton(const FinSSet& X, int n);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

ValidationReport validate(const FinSSet& X);

/// A simplicial map, given by the image of every nondegenerate source cell.
class SimplicialMap {
 public:
  SimplicialMap(SSetPtr source, SSetPtr target, std::vector<SimplexRef> assignment);
  static SimplicialMap identity(SSetPtr X);

  const FinSSet& source() const { return *source_; }
  const FinSSet& target() const { return *target_; }
  const SSetPtr& source_ptr() const { return source_; }
  const SSetPtr& target_ptr() const { return target_; }
  std::span<const SimplexRef> assignment() const { return assignment_; }

  const SimplexRef& operator[](CellId c) const { return assignment_[static_cast<std::size_t>(c)]; }
  SimplexRef operator()(const SimplexRef& s) const;

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
    return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.assignment_ == b.assignment_;
  }

 private:
  SSetPtr source_;
  SSetPtr target_;
  std::vector<SimplexRef> assignment_;
};

/// g o f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
ValidationReport validate_map(const SimplicialMap& f);
/// Valid, and bijective on nondegenerate cells in every dimension.
bool is_isomorphism(const SimplicialMap& f);

/// Searches for an isomorphism up to `dim_cap`. When `dim_cap` is below either
/// truncation the search runs on the skeleta and the map is between them.
/// nullopt means the search space was exhausted.
std::optional<SimplicialMap> iso_search(const SSetPtr& X, const SSetPtr& Y, int dim_cap);

/// Binary data X_k x Y_k -> Z_k given levelwise on normalized simplices; the
/// same thing as a simplicial map X x Y -> Z.
class BilevelMap {
 public:
  using Fn = std::function<SimplexRef(const SimplexRef&, const SimplexRef&)>;

  BilevelMap() = default;
  BilevelMap(SSetPtr left, SSetPtr right, SSetPtr target, Fn fn);

  const FinSSet& left() const { return *left_; }
  const FinSSet& right() const { return *right_; }
  const FinSSet& target() const { return *target_; }
  const SSetPtr& target_ptr() const { return target_; }
  explicit operator bool() const { return static_cast<bool>(fn_); }

  SimplexRef operator()(const SimplexRef& a, const SimplexRef& b) const;

 private:
  SSetPtr left_, right_, target_;
  Fn fn_;
};

/// Checks that f commutes with every face and degeneracy applied to both
/// coordinates, on all pairs up to `max_level`.
ValidationReport validate_bilevel(const BilevelMap& f, int max_level);

/// Integer indexing of all simplices of X up to `max_dim`, with face and
/// degeneracy tables. The FinSSet must outlive the index.
class SimplexIndex {
 public:
  SimplexIndex(const FinSSet& X, int max_dim);

  const FinSSet& sset() const { return *X_; }
  int max_dim() const { return max_dim_; }
  int count(int k) const { return static_cast<int>(levels_[static_cast<std::size_t>(k)].simplices.size()); }
  const SimplexRef& at(int k, int idx) const {
    return levels_[static_cast<std::size_t>(k)].simplices[static_cast<std::size_t>(idx)];
  }
  /// Throws ValidationError when s is not a simplex of X within range.
  int index_of(const SimplexRef& s) const;
  std::optional<int> find(const SimplexRef& s) const;
  int face(int k, int idx, int i) const {
    return levels_[static_cast<std::size_t>(k)].faces[static_cast<std::size_t>(idx * (k + 1) + i)];
  }
  /// s_i of a k-simplex; requires k < max_dim.
  int degeneracy(int k, int idx, int i) const {
    return levels_[static_cast<std::size_t>(k)].degens[static_cast<std::size_t>(idx * (k + 1) + i)];
  }
  /// Fully degenerate k-simplex on a vertex index.
  int degenerate_on_vertex(int k, int vertex_idx) const;

 private:
  struct Level {
    std::vector<SimplexRef> simplices;
    std::unordered_map<SimplexRef, int, SimplexRefHash> lookup;
    std::vector<int> faces;
    std::vector<int> degens;
  };
  const FinSSet* X_;
  int max_dim_;
  std::vector<Level> levels_;
};

}  // namespace qckit
