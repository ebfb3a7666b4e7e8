// Simplicially enriched categories with finite truncated homs, the
// rigidification C[k], simplicial functors out of it, and the
// homotopy-coherent nerve.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qckit/poset.hpp"
#include "qckit/presheaf.hpp"
#include "qckit/sset.hpp"

namespace qckit {

/// A category enriched in finite truncated simplicial sets.
///
/// Homs are indexed by ordered pairs of objects; comp(x, y, z) is the
/// levelwise composition hom(y, z) x hom(x, y) -> hom(x, z). Empty homs need
/// no composition data.
class SCat {
 public:
  SCat() = default;
  SCat(std::vector<std::string> objects, std::vector<SSetPtr> homs, std::vector<CellId> identities,
       std::vector<BilevelMap> comps);

  int object_count() const { return static_cast<int>(objects_.size()); }
  const std::string& object(int x) const { return objects_[static_cast<std::size_t>(x)]; }
  const FinSSet& hom(int x, int y) const { return *hom_ptr(x, y); }
  const SSetPtr& hom_ptr(int x, int y) const { return homs_[static_cast<std::size_t>(x * object_count() + y)]; }
  CellId identity(int x) const { return identities_[static_cast<std::size_t>(x)]; }
  /// The identity of x as a (degenerate) k-simplex of hom(x, x).
  SimplexRef identity_simplex(int x, int k) const;
  const BilevelMap& comp(int x, int y, int z) const;
  SimplexRef compose(int x, int y, int z, const SimplexRef& g, const SimplexRef& f) const;
  /// Least truncation among nonempty homs.
  int hom_truncation() const;

 private:
  std::vector<std::string> objects_;
  std::vector<SSetPtr> homs_;
  std::vector<CellId> identities_;
  std::vector<BilevelMap> comps_;
};

/// Hom simplicial sets, composition naturality, strict associativity and
/// strict units, all levelwise up to `max_level`.
ValidationReport validate(const SCat& D, int max_level);

/// Largest k for which the rigidification is available.
inline constexpr int kMaxRigidify = 6;

/// C[k] together with the mapping-poset nerves that make up its homs.
class Rigidification {
 public:
  explicit Rigidification(int k);
  int arity() const { return k_; }
  const MappingNerve& mapping(int i, int j) const;
  const SCat& scat() const { return scat_; }

 private:
  int k_;
  std::vector<std::unique_ptr<MappingNerve>> nerves_;
  SCat scat_;
};

/// Shared, lazily built rigidification; k <= kMaxRigidify.
const Rigidification& rigidification(int k);
inline const SCat& rigidify(int k) { return rigidification(k).scat(); }

/// A simplicial functor C[arity] -> D: an object for every i, and for every
/// i <= j the image of each nondegenerate cell of N(P_{i,j}).
struct SimplicialFunctor {
  int arity{0};
  std::vector<int> objects;
  std::vector<std::vector<SimplexRef>> homs;

  const std::vector<SimplexRef>& hom(int i, int j) const {
    return homs[static_cast<std::size_t>(i * (arity + 1) + j)];
  }
  std::vector<SimplexRef>& hom(int i, int j) { return homs[static_cast<std::size_t>(i * (arity + 1) + j)]; }

  friend auto operator<=>(const SimplicialFunctor&, const SimplicialFunctor&) = default;
  friend bool operator==(const SimplicialFunctor&, const SimplicialFunctor&) = default;
};

/// F on an arbitrary simplex of N(P_{i,j}).
SimplexRef functor_apply(const SimplicialFunctor& F, const SCat& D, int i, int j, const SimplexRef& s);
/// The hom component N(P_{i,j}) -> D(F i, F j) as a simplicial map.
SimplicialMap hom_map(const SimplicialFunctor& F, const SCat& D, int i, int j);
/// F o C[f].
SimplicialFunctor precompose(const SimplicialFunctor& F, const SCat& D, const MonotoneMap& f);
/// The identity functor of C[k].
SimplicialFunctor identity_functor(int k);
/// C[f]: C[l] -> C[k] as a functor into rigidify(k).
SimplicialFunctor rigidify_map(const MonotoneMap& f);

ValidationReport validate_functor(const SimplicialFunctor& F, const SCat& D);

/// All simplicial functors C[k] -> D, each once, in sorted order. Throws
/// TruncationError if D's homs are truncated below k - 1.
std::vector<SimplicialFunctor> enumerate_functors(int k, const SCat& D);

/// The homotopy-coherent nerve: cells are nondegenerate functors, keyed by
/// their full assignment.
using NerveModel = PresheafModel<SimplicialFunctor>;

/// The homotopy-coherent nerve up to `dim`.
NerveModel simplicial_nerve(const SCat& D, int dim);
/// The functor represented by an arbitrary simplex of the nerve.
SimplicialFunctor functor_of(const NerveModel& N, const SCat& D, const SimplexRef& s);
/// Inverse of functor_of; throws ValidationError for functors outside N.
SimplexRef nerve_simplex_of(const NerveModel& N, const SCat& D, const SimplicialFunctor& F);

/// Low-dimensional simplices of the nerve of a one-object D in the explicit
/// form: edge labels V_ab, paths g_abc : V_ac -> V_bc + V_ab, and for k = 3
/// the path g12 : V03 -> V0123 and the fillers of the two triangles of P_{0,3}.
struct LowSimplexData {
  int arity{0};
  std::map<std::string, SimplexRef> parts;
  friend auto operator<=>(const LowSimplexData&, const LowSimplexData&) = default;
  friend bool operator==(const LowSimplexData&, const LowSimplexData&) = default;
};

/// Lists every tuple directly from D's hom, without functor enumeration.
/// k in {1, 2, 3}; D must have exactly one object.
std::vector<LowSimplexData> classify_low_simplices(int k, const SCat& D);
SimplicialFunctor assemble_low_simplex(const LowSimplexData& t, const SCat& D);
LowSimplexData read_low_simplex(const SimplicialFunctor& F, const SCat& D);

struct ClassificationCheck {
  std::size_t functor_count{0};
  std::size_t tuple_count{0};
  bool bijective{false};
  /// Every 3-dimensional tuple has V0123 = V23 + V12 + V01 (vacuous otherwise).
  bool decomposition_holds{true};
  std::vector<std::string> problems;
};
ClassificationCheck verify_classification(int k, const SCat& D);

}  // namespace qckit
