#include "qckit/quasicat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace qckit {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

std::string describe(const FinSSet& X, const HornProblem& p) {
  std::string s = "horn(" + std::to_string(p.n) + "," + std::to_string(p.i) + ") [";
  bool first = true;
  for (int j = 0; j <= p.n; ++j) {
    if (j == p.i) continue;
    s += (first ? "" : ", ") + ("d" + std::to_string(j) + "=") + describe(X, p.faces[static_cast<std::size_t>(j)]);
    first = false;
  }
  return s + "]";
}

void check_horn(const FinSSet& X, const HornProblem& p) {
  if (p.n < 1 || p.i < 0 || p.i > p.n || static_cast<int>(p.faces.size()) != p.n + 1) {
    throw ValidationError("malformed horn problem");
  }
  for (int j = 0; j <= p.n; ++j) {
    if (j != p.i && p.faces[static_cast<std::size_t>(j)].dim() != p.n - 1) {
      throw ValidationError("horn face d" + std::to_string(j) + " has the wrong dimension");
    }
  }
  for (int j = 0; j <= p.n; ++j) {
    for (int k = j + 1; k <= p.n; ++k) {
      if (j == p.i || k == p.i) continue;
      const SimplexRef a = face(X, p.faces[static_cast<std::size_t>(k)], j);
      const SimplexRef b = face(X, p.faces[static_cast<std::size_t>(j)], k - 1);
      if (a != b) {
        throw ValidationError("horn faces disagree: d" + std::to_string(j) + "(face " + std::to_string(k) + ") = " +
                              describe(X, a) + " but d" + std::to_string(k - 1) + "(face " + std::to_string(j) +
                              ") = " + describe(X, b));
      }
    }
  }
}

HornSolver::HornSolver(const FinSSet& X, int max_dim) : index_(X, std::min(max_dim, X.truncation())) {}

std::optional<int> HornSolver::fill(int n, int i, const std::vector<int>& faces) const {
  if (n > index_.max_dim()) throw TruncationError("horn filler above truncation");
  for (int idx = 0; idx < index_.count(n); ++idx) {
    bool ok = true;
    for (int j = 0; j <= n && ok; ++j)
      if (j != i) ok = index_.face(n, idx, j) == faces[static_cast<std::size_t>(j)];
    if (ok) return idx;
  }
  return std::nullopt;
}

void HornSolver::for_each_horn(int n, int i, const std::function<bool(const std::vector<int>&)>& visit) const {
  if (n > index_.max_dim()) throw TruncationError("horn above truncation");
  std::vector<int> faces(static_cast<std::size_t>(n + 1), -1);
  bool stop = false;
  std::function<void(int)> choose = [&](int j) {
    if (stop) return;
    if (j > n) {
      if (!visit(faces)) stop = true;
      return;
    }
    if (j == i) {
      choose(j + 1);
      return;
    }
    for (int y = 0; y < index_.count(n - 1) && !stop; ++y) {
      bool ok = true;
      for (int jj = 0; jj < j && ok && n >= 2; ++jj) {
        if (jj == i) continue;
        ok = index_.face(n - 1, y, jj) == index_.face(n - 1, faces[static_cast<std::size_t>(jj)], j - 1);
      }
      if (!ok) continue;
      faces[static_cast<std::size_t>(j)] = y;
      choose(j + 1);
    }
    faces[static_cast<std::size_t>(j)] = -1;
  };
  choose(0);
}

std::optional<SimplexRef> HornSolver::find_filler(const HornProblem& p) const {
  check_horn(sset(), p);
  std::vector<int> idx(static_cast<std::size_t>(p.n + 1), -1);
  for (int j = 0; j <= p.n; ++j)
    if (j != p.i) idx[static_cast<std::size_t>(j)] = index_.index_of(p.faces[static_cast<std::size_t>(j)]);
  if (auto f = fill(p.n, p.i, idx)) return index_.at(p.n, *f);
  return std::nullopt;
}

std::optional<SimplexRef> find_filler(const FinSSet& X, const HornProblem& p) {
  if (p.n > X.truncation()) throw TruncationError("horn filler above truncation");
  return HornSolver(X, p.n).find_filler(p);
}

namespace {

HornVerdict horn_check(const FinSSet& X, int dim, bool inner) {
  if (dim > X.truncation()) throw TruncationError("horn check above truncation");
  HornVerdict v;
  const HornSolver S(X, dim);
  for (int n = inner ? 2 : 1; n <= dim && v.ok; ++n) {
    for (int i = inner ? 1 : 0; i <= (inner ? n - 1 : n) && v.ok; ++i) {
      S.for_each_horn(n, i, [&](const std::vector<int>& faces) {
        ++v.horns_checked;
        if (S.fill(n, i, faces)) return true;
        HornProblem p{n, i, {}};
        for (int j = 0; j <= n; ++j) p.faces.push_back(j == i ? SimplexRef{} : S.index().at(n - 1, faces[static_cast<std::size_t>(j)]));
        v.ok = false;
        v.witness = std::move(p);
        return false;
      });
    }
  }
  return v;
}

}  // namespace

HornVerdict is_quasicategory_up_to(const FinSSet& X, int dim) { return horn_check(X, dim, true); }
HornVerdict is_kan_up_to(const FinSSet& X, int dim) { return horn_check(X, dim, false); }

SimplexRef edge_source(const FinSSet& X, const SimplexRef& e) { return face(X, e, 1); }
SimplexRef edge_target(const FinSSet& X, const SimplexRef& e) { return face(X, e, 0); }

std::optional<InvertibilityWitness> is_invertible_edge(const HornSolver& S, const SimplexRef& e) {
  const SimplexIndex& I = S.index();
  if (e.dim() != 1) throw IndexError("invertibility is a property of edges");
  if (I.max_dim() < 2) throw TruncationError("invertibility needs 2-simplices");
  const int ie = I.index_of(e);
  const int src = I.face(1, ie, 1), tgt = I.face(1, ie, 0);
  const int s0src = I.degeneracy(0, src, 0), s0tgt = I.degeneracy(0, tgt, 0);
  auto find2 = [&](int d2, int d1, int d0) -> std::optional<int> {
    for (int t = 0; t < I.count(2); ++t)
      if (I.face(2, t, 2) == d2 && I.face(2, t, 1) == d1 && I.face(2, t, 0) == d0) return t;
    return std::nullopt;
  };
  for (int g = 0; g < I.count(1); ++g) {
    if (I.face(1, g, 1) != tgt || I.face(1, g, 0) != src) continue;
    auto sigma = find2(ie, s0src, g);
    if (!sigma) continue;
    auto tau = find2(g, s0tgt, ie);
    if (!tau) continue;
    return InvertibilityWitness{I.at(1, g), I.at(2, *sigma), I.at(2, *tau)};
  }
  return std::nullopt;
}

std::optional<InvertibilityWitness> is_invertible_edge(const FinSSet& X, const SimplexRef& e) {
  return is_invertible_edge(HornSolver(X, 2), e);
}

CoreResult core(const SSetPtr& Xp, int dim) {
  const FinSSet& X = *Xp;
  if (dim > X.truncation()) throw TruncationError("core above truncation");
  std::set<CellId> invertible;
  if (dim >= 1 && !X.cells(1).empty()) {
    if (X.truncation() < 2) throw TruncationError("edges cannot be tested for invertibility below truncation 2");
    const HornSolver S(X, 2);
    for (CellId e : X.cells(1))
      if (is_invertible_edge(S, X.simplex(e))) invertible.insert(e);
  }
  FinSSetBuilder b(dim);
  std::vector<CellId> renumber(X.cell_count(), -1);
  std::vector<SimplexRef> inclusion;
  for (int d = 0; d <= dim; ++d) {
    for (CellId c : X.cells(d)) {
      bool keep = true;
      for (const auto& iota : all_injections(1, d)) {
        if (!keep) break;
        const SimplexRef edge = apply_operator(X, X.simplex(c), iota);
        if (edge.is_nondegenerate() && !invertible.contains(edge.cell)) keep = false;
      }
      if (!keep) continue;
      std::vector<SimplexRef> faces;
      if (d == 0) faces.push_back({});
      for (const auto& f : X.faces(c)) {
        if (d == 0) break;
        faces.push_back({f.epi, renumber[static_cast<std::size_t>(f.cell)]});
      }
      renumber[static_cast<std::size_t>(c)] = b.add_cell(X.name(c), std::move(faces));
      inclusion.push_back(X.simplex(c));
    }
  }
  auto C = std::make_shared<const FinSSet>(std::move(b).build());
  return {C, SimplicialMap(C, Xp, std::move(inclusion)), std::vector<CellId>(invertible.begin(), invertible.end())};
}

std::vector<std::vector<CellId>> pi0(const FinSSet& X) {
  UnionFind uf(X.cell_count());
  if (X.truncation() >= 1) {
    for (CellId e : X.cells(1)) {
      const SimplexRef s = X.simplex(e);
      uf.unite(vertex_of(X, s, 0), vertex_of(X, s, 1));
    }
  }
  std::map<int, std::vector<CellId>> groups;
  for (CellId v : X.cells(0)) groups[uf.find(v)].push_back(v);
  std::vector<std::vector<CellId>> out;
  for (auto& [root, vs] : groups) {
    std::ranges::sort(vs);
    out.push_back(std::move(vs));
  }
  std::ranges::sort(out);
  return out;
}

FiniteGroup cyclic_group(int n) {
  FiniteGroup G;
  G.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return G;
}

ValidationReport validate(const FiniteGroup& G) {
  ValidationReport r;
  const int n = G.order();
  for (int a = 0; a < n; ++a) {
    if (G.mul(G.identity, a) != a || G.mul(a, G.identity) != a) r.violations.push_back("identity law fails at " + std::to_string(a));
    bool has_inverse = false;
    for (int b = 0; b < n; ++b) {
      if (G.mul(a, b) == G.identity && G.mul(b, a) == G.identity) has_inverse = true;
      for (int c = 0; c < n; ++c)
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
          r.violations.push_back("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    }
    if (!has_inverse) r.violations.push_back("no inverse for " + std::to_string(a));
  }
  return r;
}

std::optional<std::vector<int>> group_isomorphism(const FiniteGroup& G, const FiniteGroup& H) {
  const int n = G.order();
  if (n != H.order()) return std::nullopt;
  std::vector<int> rest_g, rest_h;
  for (int a = 0; a < n; ++a) {
    if (a != G.identity) rest_g.push_back(a);
    if (a != H.identity) rest_h.push_back(a);
  }
  std::vector<int> f(static_cast<std::size_t>(n));
  do {
    f[static_cast<std::size_t>(G.identity)] = H.identity;
    for (std::size_t t = 0; t < rest_g.size(); ++t) f[static_cast<std::size_t>(rest_g[t])] = rest_h[t];
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = f[static_cast<std::size_t>(G.mul(a, b))] == H.mul(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]);
    if (ok) return f;
  } while (std::next_permutation(rest_h.begin(), rest_h.end()));
  return std::nullopt;
}

FundamentalGroup pi1(const FinSSet& X, CellId v) {
  if (X.dim(v) != 0) throw IndexError("base point is not a vertex");
  if (X.truncation() < 2) throw TruncationError("fundamental group needs 2-simplices");
  const HornSolver S(X, 2);
  const SimplexIndex& I = S.index();
  const int vi = I.index_of(X.simplex(v));
  const int unit = I.degeneracy(0, vi, 0);
  std::vector<int> loops;
  for (int e = 0; e < I.count(1); ++e)
    if (I.face(1, e, 0) == vi && I.face(1, e, 1) == vi) loops.push_back(e);
  std::map<int, int> pos;
  for (std::size_t t = 0; t < loops.size(); ++t) pos[loops[t]] = static_cast<int>(t);
  UnionFind uf(loops.size());
  for (int t = 0; t < I.count(2); ++t) {
    if (I.face(2, t, 0) != unit) continue;
    auto a = pos.find(I.face(2, t, 2)), b = pos.find(I.face(2, t, 1));
    if (a != pos.end() && b != pos.end()) uf.unite(a->second, b->second);
  }
  std::map<int, int> class_of_root;
  FundamentalGroup out;
  std::vector<int> rep_index;
  for (std::size_t t = 0; t < loops.size(); ++t) {
    const int r = uf.find(static_cast<int>(t));
    if (!class_of_root.contains(r)) {
      class_of_root[r] = static_cast<int>(rep_index.size());
      rep_index.push_back(loops[t]);
      out.representatives.push_back(I.at(1, loops[t]));
    }
  }
  auto class_of = [&](int loop) { return class_of_root.at(uf.find(pos.at(loop))); };
  const auto n = rep_index.size();
  out.group.identity = class_of(unit);
  out.group.table.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::vector<int> faces{rep_index[b], -1, rep_index[a]};
      auto sigma = S.fill(2, 1, faces);
      if (!sigma) {
        HornProblem p{2, 1, {I.at(1, rep_index[b]), SimplexRef{}, I.at(1, rep_index[a])}};
        throw Error("not Kan: no filler for " + describe(X, p));
      }
      out.group.table[a][b] = class_of(I.face(2, *sigma, 1));
    }
  }
  return out;
}

}  // namespace qckit
