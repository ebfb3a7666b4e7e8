// Horn filling, quasicategory and Kan verdicts, invertible edges, cores and
// low homotopy.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qckit/sset.hpp"

namespace qckit {

/// A horn Lambda^n_i in X: faces[j] for j != i, faces[i] unused.
struct HornProblem {
  int n{0}, i{0};
  std::vector<SimplexRef> faces;
};

/// Throws ValidationError naming the first pair of faces that disagree.
void check_horn(const FinSSet& X, const HornProblem& p);

/// Horn searches against one simplicial set, with a shared simplex index.
class HornSolver {
 public:
  HornSolver(const FinSSet& X, int max_dim);

  const FinSSet& sset() const { return index_.sset(); }
  const SimplexIndex& index() const { return index_; }

  /// First n-simplex (in index order) whose faces match, or nullopt when the
  /// search is exhausted.
  std::optional<SimplexRef> find_filler(const HornProblem& p) const;
  /// Every compatible horn of shape (n, i); `visit` returns false to stop.
  void for_each_horn(int n, int i, const std::function<bool(const std::vector<int>&)>& visit) const;
  std::optional<int> fill(int n, int i, const std::vector<int>& faces) const;

 private:
  SimplexIndex index_;
};

std::optional<SimplexRef> find_filler(const FinSSet& X, const HornProblem& p);

struct HornVerdict {
  bool ok{true};
  std::size_t horns_checked{0};
  /// The first unfillable horn.
  std::optional<HornProblem> witness;
};

/// Inner horns for 2 <= n <= dim.
HornVerdict is_quasicategory_up_to(const FinSSet& X, int dim);
/// All horns for 1 <= n <= dim.
HornVerdict is_kan_up_to(const FinSSet& X, int dim);

/// An inverse g of e with 2-cells sigma (d2 = e, d0 = g, d1 = s0 source) and
/// tau (d2 = g, d0 = e, d1 = s0 target).
struct InvertibilityWitness {
  SimplexRef g, sigma, tau;
};

/// Source d1 and target d0 of an edge.
SimplexRef edge_source(const FinSSet& X, const SimplexRef& e);
SimplexRef edge_target(const FinSSet& X, const SimplexRef& e);

std::optional<InvertibilityWitness> is_invertible_edge(const HornSolver& S, const SimplexRef& e);
std::optional<InvertibilityWitness> is_invertible_edge(const FinSSet& X, const SimplexRef& e);

struct CoreResult {
  SSetPtr core;
  SimplicialMap inclusion;
  /// Invertible nondegenerate edges of the ambient.
  std::vector<CellId> invertible_edges;
};

/// Cells of dimension <= dim all of whose edges are invertible.
CoreResult core(const SSetPtr& X, int dim);

/// Vertices grouped by edge zigzags, each group and the list sorted.
std::vector<std::vector<CellId>> pi0(const FinSSet& X);

/// A finite group by its multiplication table.
struct FiniteGroup {
  std::vector<std::vector<int>> table;
  int identity{0};
  int order() const { return static_cast<int>(table.size()); }
  int mul(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
};

FiniteGroup cyclic_group(int n);
ValidationReport validate(const FiniteGroup& G);
/// A bijection G -> H respecting multiplication, if any.
std::optional<std::vector<int>> group_isomorphism(const FiniteGroup& G, const FiniteGroup& H);

struct FundamentalGroup {
  FiniteGroup group;
  /// A loop representing each element.
  std::vector<SimplexRef> representatives;
};

/// Loops at v modulo 2-cells with degenerate d0, multiplied through inner
/// 2-horn fillers. Throws Error with the unfillable horn when X lacks one.
FundamentalGroup pi1(const FinSSet& X, CellId v);

std::string describe(const FinSSet& X, const HornProblem& p);

}  // namespace qckit
