#include "qckit/grassmann.hpp"

#include <algorithm>
#include <random>
#include <utility>
#include <sstream>

namespace qckit {

RationalMatrix rref(RationalMatrix m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (Eigen::Index j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
    const Rational lead = m(r, c);
    for (Eigen::Index j = 0; j < cols; ++j) m(r, j) /= lead;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  RationalMatrix out(r, cols);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = m(i, j);
  return out;
}

RationalSubspace::RationalSubspace(int copies, int base_dim, const RationalMatrix& spanning)
    : copies_(copies), base_dim_(base_dim) {
  if (copies < 0 || base_dim < 1) throw IndexError("ambient must have copies >= 0 and base_dim >= 1");
  if (spanning.cols() != static_cast<Eigen::Index>(copies) * base_dim) {
    throw IndexError("spanning set has " + std::to_string(spanning.cols()) + " columns, ambient has " +
                     std::to_string(copies * base_dim));
  }
  basis_ = rref(spanning);
  if (basis_.rows() == 0) {
    copies_ = 0;
    basis_.resize(0, 0);
  }
}

bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
  if (a.copies_ != b.copies_ || a.base_dim_ != b.base_dim_ || a.basis_.rows() != b.basis_.rows() ||
      a.basis_.cols() != b.basis_.cols()) {
    return false;
  }
  for (Eigen::Index i = 0; i < a.basis_.rows(); ++i)
    for (Eigen::Index j = 0; j < a.basis_.cols(); ++j)
      if (a.basis_(i, j) != b.basis_(i, j)) return false;
  return true;
}

RationalSubspace RationalSubspace::zero(int base_dim) { return RationalSubspace(0, base_dim, RationalMatrix(0, 0)); }

std::string RationalSubspace::to_string() const {
  std::ostringstream out;
  out << "Gr_" << rank() << "(Q^" << base_dim_ << " x " << copies_ << ")";
  for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
    out << (i ? " " : " [") << "(";
    for (Eigen::Index j = 0; j < basis_.cols(); ++j) out << (j ? "," : "") << basis_(i, j);
    out << ")";
  }
  if (basis_.rows()) out << "]";
  return out.str();
}

RationalSubspace boxplus(const RationalSubspace& V, const RationalSubspace& W) {
  if (V.base_dim() != W.base_dim()) throw CompositionError("boxplus needs equal base dimensions");
  const int copies = V.copies() + W.copies();
  RationalMatrix m = RationalMatrix::Zero(V.rank() + W.rank(), V.ambient_dim() + W.ambient_dim());
  for (int i = 0; i < V.rank(); ++i)
    for (int j = 0; j < V.ambient_dim(); ++j) m(i, j) = V.basis()(i, j);
  for (int i = 0; i < W.rank(); ++i)
    for (int j = 0; j < W.ambient_dim(); ++j) m(V.rank() + i, V.ambient_dim() + j) = W.basis()(i, j);
  return RationalSubspace(copies, V.base_dim(), m);
}

RationalSubspace random_subspace(std::uint64_t& state, int copies, int base_dim, int rank) {
  std::mt19937_64 rng(state);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
  const int n = copies * base_dim;
  // Retry until the rows are independent.
  for (;;) {
    RationalMatrix m(rank, n);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
    state = rng();
    RationalSubspace V(copies, base_dim, m);
    if (V.rank() == rank) return V;
  }
}

std::string pairing_name(Pairing p) {
  switch (p) {
    case Pairing::cantor: return "cantor";
    case Pairing::interleave: return "interleave";
    case Pairing::szudzik: return "szudzik";
  }
  return "?";
}

std::int64_t pair(Pairing p, std::int64_t s, std::int64_t n) {
  switch (p) {
    case Pairing::cantor: return (s + n) * (s + n + 1) / 2 + n;
    case Pairing::interleave:
      if (s < 0 || s > 1) throw IndexError("interleave pairing takes s in {0, 1}");
      return 2 * n + s;
    case Pairing::szudzik: return s >= n ? s * s + s + n : n * n + s;
  }
  return 0;
}

RationalSubspace pairing_sum(const RationalSubspace& V, const RationalSubspace& W, Pairing p) {
  if (V.base_dim() != 1 || W.base_dim() != 1) throw CompositionError("pairing sums act on coordinate windows (base_dim 1)");
  const int window = std::max(V.copies(), W.copies());
  if (V.rank() + W.rank() == 0) return RationalSubspace::zero(1);
  RationalMatrix m = RationalMatrix::Zero(V.rank() + W.rank(), window);
  auto route = [&](const RationalSubspace& X, int s, Eigen::Index row0) {
    for (Eigen::Index i = 0; i < X.basis().rows(); ++i) {
      for (Eigen::Index j = 0; j < X.basis().cols(); ++j) {
        if (X.basis()(i, j) == 0) continue;
        const std::int64_t target = pair(p, s, j);
        if (target >= window) {
          throw IndexError("coordinate " + std::to_string(j) + " of summand " + std::to_string(s) + " lands at " +
                           std::to_string(target) + " under " + pairing_name(p) + " pairing; enlarge the window to at least " +
                           std::to_string(target + 1));
        }
        m(row0 + i, target) = X.basis()(i, j);
      }
    }
  };
  route(V, 0, 0);
  route(W, 1, V.rank());
  return RationalSubspace(window, 1, m);
}

RationalSubspace axis_line(int axis, int window) {
  if (axis < 0 || axis >= window) throw IndexError("axis outside the window");
  RationalMatrix m = RationalMatrix::Zero(1, window);
  m(0, axis) = 1;
  return RationalSubspace(window, 1, m);
}

std::optional<NonAssociativityWitness> find_nonassociativity_witness(Pairing p, int window, int max_axis) {
  for (int a = 0; a < max_axis; ++a)
    for (int b = 0; b < max_axis; ++b)
      for (int c = 0; c < max_axis; ++c) {
        const auto V = axis_line(a, window), W = axis_line(b, window), U = axis_line(c, window);
        try {
          auto left = pairing_sum(pairing_sum(V, W, p), U, p);
          auto right = pairing_sum(V, pairing_sum(W, U, p), p);
          if (!(left == right)) return NonAssociativityWitness{a, b, c, std::move(left), std::move(right)};
        } catch (const IndexError&) {
        }
      }
  return std::nullopt;
}

AssocCheck boxplus_assoc_check(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d_dist(1, 4), n_dist(0, 2);
  AssocCheck out;
  for (int t = 0; t < trials; ++t) {
    const int d = d_dist(rng);
    RationalSubspace X[3];
    for (auto& x : X) {
      const int copies = n_dist(rng);
      std::uniform_int_distribution<int> k_dist(0, std::min(3, copies * d));
      std::uint64_t state = rng();
      x = random_subspace(state, copies, d, k_dist(rng));
    }
    ++out.trials;
    const auto left = boxplus(boxplus(X[0], X[1]), X[2]);
    const auto right = boxplus(X[0], boxplus(X[1], X[2]));
    if (!(left == right)) ++out.failures;
    if (left.rank() != X[0].rank() + X[1].rank() + X[2].rank()) out.ranks_add = false;
  }
  return out;
}

}  // namespace qckit
