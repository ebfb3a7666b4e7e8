// Joins of simplicial sets, slices and coslices.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qckit/enriched.hpp"
#include "qckit/presheaf.hpp"
#include "qckit/sset.hpp"

namespace qckit {

/// X * Y in cut normal form. A k-cell is a pair (x, y) of nondegenerate
/// cells with dim x + dim y + 1 = k, where either side may be the empty
/// marker (-1). Faces d_i act on x for i <= dim x and on y otherwise.
class Join {
 public:
  /// Truncation is trunc(X) + trunc(Y) + 1, or that of the nonempty factor
  /// when one side is empty.
  Join(SSetPtr X, SSetPtr Y);

  const SSetPtr& sset() const { return sset_; }
  const FinSSet& left() const { return *X_; }
  const FinSSet& right() const { return *Y_; }
  const SSetPtr& left_ptr() const { return X_; }
  const SSetPtr& right_ptr() const { return Y_; }

  CellId cell_of(CellId x, CellId y) const { return cells_.at({x, y}); }
  std::pair<CellId, CellId> parts(CellId c) const { return parts_[static_cast<std::size_t>(c)]; }

  /// The simplex x * y; absent parts are nullopt.
  SimplexRef simplex_of(const std::optional<SimplexRef>& x, const std::optional<SimplexRef>& y) const;
  /// Inverse of simplex_of.
  std::pair<std::optional<SimplexRef>, std::optional<SimplexRef>> parts_of(const SimplexRef& s) const;

 private:
  SSetPtr X_, Y_, sset_;
  std::map<std::pair<CellId, CellId>, CellId> cells_;
  std::vector<std::pair<CellId, CellId>> parts_;
};

/// iota_0: X -> X * Y and iota_1: Y -> X * Y.
std::pair<SimplicialMap, SimplicialMap> join_inclusions(const Join& J);
/// phi * psi : J.left * J.right -> target.left * target.right.
SimplicialMap join_of_maps(const SimplicialMap& phi, const SimplicialMap& psi, const Join& J, const Join& target);

enum class SliceSide { under, over };

/// Cells under (K * Delta^n -> C) or over (Delta^n * K -> C) an anchor f: K -> C.
struct SlicePresentation {
  SSetPtr base;
  SimplicialMap anchor;
  SliceSide side{SliceSide::under};
};

/// The presentation x/C (under) or C/x (over) for a vertex x of C.
SlicePresentation vertex_slice(const SSetPtr& C, CellId x, SliceSide side);

struct Slice {
  /// A cell is the list of images of the cells of the relevant join, as
  /// simplices of the base.
  using Key = std::vector<SimplexRef>;

  SlicePresentation presentation;
  PresheafModel<Key> model;
  /// The joins K * Delta^n (or Delta^n * K) for n = 0..dim.
  std::vector<std::shared_ptr<const Join>> joins;
  SimplicialMap projection;

  const SSetPtr& sset() const { return model.sset; }
  /// A cell as an explicit map out of its join.
  SimplicialMap cell_map(CellId c) const;
};

/// The slice up to `dim`. Requires the base to be truncated at or above
/// dim + dim K + 1.
Slice slice(const SlicePresentation& p, int dim);

/// The coslice */C of a C with a single vertex: n-cells are the (n+1)-cells of
/// C, plus s0 c for each n-cell c of C; d_i is d_{i+1} in C.
struct Coslice {
  SSetPtr sset;
  SSetPtr base;
  /// The underlying (n+1)-simplex of C of every cell.
  std::vector<SimplexRef> underlying;
  SimplicialMap projection;
  /// Cell of s0 c, per cell c of C (-1 where absent).
  std::vector<CellId> s0_cell;
  /// Cell over each nondegenerate (n+1)-cell of C (-1 for vertices).
  std::vector<CellId> top_cell;

  /// Underlying simplex of an arbitrary simplex of the coslice.
  SimplexRef underlying_of(const SimplexRef& s) const;
  /// The coslice simplex over an (n+1)-simplex of C.
  SimplexRef from_underlying(const SimplexRef& w) const;
};

Coslice coslice_one_object_fastpath(const SSetPtr& C, int dim);

/// Cell-for-cell comparison of the generic under-slice at the unique vertex
/// with the fastpath: the map sending each generic cell to the fastpath cell
/// with the same underlying simplex.
std::optional<SimplicialMap> compare_coslices(const Slice& generic, const Coslice& fast);

/// A 1-cell of the coslice */N(D) for one-object D, read as the 2-simplex data
/// (V01, V12, V02, gamma): an edge V01 -> V02 with gamma: V02 -> V12 + V01.
struct EdgeAnatomy {
  SimplexRef V01, V12, V02, gamma;
  friend bool operator==(const EdgeAnatomy&, const EdgeAnatomy&) = default;
};
EdgeAnatomy slice_edge_anatomy(const Coslice& S, const NerveModel& N, const SCat& D, const SimplexRef& edge);
/// The coslice edge with the given data; inverse of slice_edge_anatomy.
SimplexRef assemble_edge(const Coslice& S, const NerveModel& N, const SCat& D, const EdgeAnatomy& a);

}  // namespace qckit
