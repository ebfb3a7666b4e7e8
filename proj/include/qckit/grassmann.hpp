// Exact rational points of finite Grassmannians: block direct sum and sums
// routed through a pairing function.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include "qckit/ordinal.hpp"

namespace qckit {

/// Exact rationals; expression templates are off so Eigen sees plain values.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational::backend_type, boost::multiprecision::et_off>;

}  // namespace qckit

namespace Eigen {
template <>
struct NumTraits<qckit::Rational> : GenericNumTraits<qckit::Rational> {
  using Real = qckit::Rational;
  using NonInteger = qckit::Rational;
  using Nested = qckit::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace qckit {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Reduced row echelon form with zero rows dropped.
RationalMatrix rref(RationalMatrix m);

/// A subspace of Q^(copies * base_dim), stored by its reduced row echelon
/// basis. The zero subspace is always stored with zero copies.
class RationalSubspace {
 public:
  RationalSubspace() = default;
  /// The span of the rows of `spanning`, which must have copies * base_dim columns.
  RationalSubspace(int copies, int base_dim, const RationalMatrix& spanning);
  static RationalSubspace zero(int base_dim);

  int copies() const { return copies_; }
  int base_dim() const { return base_dim_; }
  int ambient_dim() const { return copies_ * base_dim_; }
  int rank() const { return static_cast<int>(basis_.rows()); }
  const RationalMatrix& basis() const { return basis_; }

  std::string to_string() const;

  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b);

 private:
  int copies_{0};
  int base_dim_{1};
  RationalMatrix basis_;
};

/// V in the first copies, W in the last. Throws CompositionError on a
/// base dimension mismatch.
RationalSubspace boxplus(const RationalSubspace& V, const RationalSubspace& W);

/// Uniform random subspace data with small numerators and denominators.
RationalSubspace random_subspace(std::uint64_t& state, int copies, int base_dim, int rank);

enum class Pairing { cantor, interleave, szudzik };
std::string pairing_name(Pairing p);
/// Injective map (s, n) -> N; interleave is injective for s in {0, 1}.
std::int64_t pair(Pairing p, std::int64_t s, std::int64_t n);

/// V + W inside the coordinate window Q^window (base_dim 1, copies =
/// window): coordinate n of V goes to pair(0, n), of W to pair(1, n). Throws
/// IndexError with resize guidance when a used coordinate leaves the window.
RationalSubspace pairing_sum(const RationalSubspace& V, const RationalSubspace& W, Pairing p);

/// The coordinate line spanned by e_axis in Q^window.
RationalSubspace axis_line(int axis, int window);

struct NonAssociativityWitness {
  int a, b, c;  // axes of V, W, U
  RationalSubspace left, right;  // (V + W) + U and V + (W + U)
};

/// First triple of axis lines, in lexicographic order below `max_axis`, on
/// which the pairing sum is not associative.
std::optional<NonAssociativityWitness> find_nonassociativity_witness(Pairing p, int window, int max_axis);

struct AssocCheck {
  int trials{0};
  int failures{0};
  bool ranks_add{true};
};
/// boxplus associativity on seeded random triples with base_dim <= 4, rank <= 3.
AssocCheck boxplus_assoc_check(std::uint64_t seed, int trials);

}  // namespace qckit
