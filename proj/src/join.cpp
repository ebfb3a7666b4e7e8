#include "qckit/join.hpp"

#include <algorithm>
#include <functional>

namespace qckit {

namespace {

int dim_or_empty(const FinSSet& X, CellId c) { return c < 0 ? -1 : X.dim(c); }

// Largest dimension carrying a cell; -1 if empty.
int top_dim(const FinSSet& X) {
  int d = -1;
  for (std::size_t c = 0; c < X.cell_count(); ++c) d = std::max(d, X.dim(static_cast<CellId>(c)));
  return d;
}

}  // namespace

Join::Join(SSetPtr X, SSetPtr Y) : X_(std::move(X)), Y_(std::move(Y)) {
  const int tx = X_->truncation(), ty = Y_->truncation();
  const int trunc = X_->empty() ? ty : Y_->empty() ? tx : tx + ty + 1;
  FinSSetBuilder b(trunc);
  for (int d = 0; d <= trunc; ++d) {
    for (int a = -1; a <= d; ++a) {
      const int bdim = d - 1 - a;
      if (a > tx || bdim > ty) continue;
      const std::vector<CellId> none{-1};
      const auto xs = a < 0 ? std::span<const CellId>(none) : X_->cells(a);
      const auto ys = bdim < 0 ? std::span<const CellId>(none) : Y_->cells(bdim);
      for (CellId x : xs) {
        for (CellId y : ys) {
          const std::optional<SimplexRef> xs_ = x < 0 ? std::nullopt : std::optional(X_->simplex(x));
          const std::optional<SimplexRef> ys_ = y < 0 ? std::nullopt : std::optional(Y_->simplex(y));
          std::vector<SimplexRef> faces;
          if (d == 0) faces.push_back({});
          for (int i = 0; d > 0 && i <= d; ++i) {
            if (i <= a) {
              faces.push_back(simplex_of(a == 0 ? std::nullopt : std::optional(face(*X_, *xs_, i)), ys_));
            } else {
              faces.push_back(simplex_of(xs_, bdim == 0 ? std::nullopt : std::optional(face(*Y_, *ys_, i - a - 1))));
            }
          }
          const std::string name = (x < 0 ? "" : X_->name(x)) + "|" + (y < 0 ? "" : Y_->name(y));
          const CellId c = b.add_cell(name, std::move(faces));
          cells_.emplace(std::pair(x, y), c);
          parts_.emplace_back(x, y);
        }
      }
    }
  }
  sset_ = std::make_shared<const FinSSet>(std::move(b).build());
}

SimplexRef Join::simplex_of(const std::optional<SimplexRef>& x, const std::optional<SimplexRef>& y) const {
  if (!x && !y) throw IndexError("a join simplex needs at least one part");
  const CellId xc = x ? x->cell : -1;
  const CellId yc = y ? y->cell : -1;
  const int a = dim_or_empty(*X_, xc);
  const int bdim = dim_or_empty(*Y_, yc);
  std::vector<int> values;
  if (x)
    for (int j = 0; j <= x->dim(); ++j) values.push_back(x->epi(j));
  if (y)
    for (int j = 0; j <= y->dim(); ++j) values.push_back(a + 1 + y->epi(j));
  auto it = cells_.find({xc, yc});
  if (it == cells_.end()) throw TruncationError("join cell above truncation");
  return {MonotoneMap(a + bdim + 1, values), it->second};
}

std::pair<std::optional<SimplexRef>, std::optional<SimplexRef>> Join::parts_of(const SimplexRef& s) const {
  const auto [xc, yc] = parts(s.cell);
  const int a = dim_or_empty(*X_, xc);
  const int bdim = dim_or_empty(*Y_, yc);
  std::vector<int> ex, ey;
  for (int j = 0; j <= s.dim(); ++j) {
    if (s.epi(j) <= a) ex.push_back(s.epi(j));
    else ey.push_back(s.epi(j) - a - 1);
  }
  std::pair<std::optional<SimplexRef>, std::optional<SimplexRef>> out;
  if (!ex.empty()) out.first = SimplexRef{MonotoneMap(a, ex), xc};
  if (!ey.empty()) out.second = SimplexRef{MonotoneMap(bdim, ey), yc};
  return out;
}

std::pair<SimplicialMap, SimplicialMap> join_inclusions(const Join& J) {
  std::vector<SimplexRef> left, right;
  for (std::size_t x = 0; x < J.left().cell_count(); ++x)
    left.push_back(J.sset()->simplex(J.cell_of(static_cast<CellId>(x), -1)));
  for (std::size_t y = 0; y < J.right().cell_count(); ++y)
    right.push_back(J.sset()->simplex(J.cell_of(-1, static_cast<CellId>(y))));
  return {SimplicialMap(J.left_ptr(), J.sset(), std::move(left)), SimplicialMap(J.right_ptr(), J.sset(), std::move(right))};
}

SimplicialMap join_of_maps(const SimplicialMap& phi, const SimplicialMap& psi, const Join& J, const Join& target) {
  if (!(phi.source() == J.left()) || !(psi.source() == J.right()) || !(phi.target() == target.left()) ||
      !(psi.target() == target.right())) {
    throw CompositionError("maps do not match the joins");
  }
  std::vector<SimplexRef> assignment;
  for (std::size_t c = 0; c < J.sset()->cell_count(); ++c) {
    const auto [x, y] = J.parts(static_cast<CellId>(c));
    assignment.push_back(target.simplex_of(x < 0 ? std::nullopt : std::optional(phi[x]), y < 0 ? std::nullopt : std::optional(psi[y])));
  }
  return SimplicialMap(J.sset(), target.sset(), std::move(assignment));
}

// ---------------------------------------------------------------------------
// Slices

SlicePresentation vertex_slice(const SSetPtr& C, CellId x, SliceSide side) {
  if (C->dim(x) != 0) throw ValidationError("anchor is not a vertex");
  auto point = std::make_shared<const FinSSet>(standard_simplex(0));
  return {C, SimplicialMap(point, C, {C->simplex(x)}), side};
}

namespace {

// The simplex of Delta^n given by the operator Delta^psi applied to a cell of
// Delta^m.
SimplexRef image_in_simplex(const FinSSet& Dm, CellId c, const FinSSet& Dn, const MonotoneMap& psi) {
  std::vector<int> vertices;
  const SimplexRef s = Dm.simplex(c);
  for (int v = 0; v <= s.dim(); ++v) vertices.push_back(std::stoi(Dm.name(vertex_of(Dm, s, v))));
  const MonotoneMap inj(psi.source_arity(), vertices);
  return standard_simplex_ref(Dn, psi.target_arity(), compose(psi, inj));
}

}  // namespace

SimplicialMap Slice::cell_map(CellId c) const {
  const int n = sset()->dim(c);
  const auto& J = *joins[static_cast<std::size_t>(n)];
  return SimplicialMap(J.sset(), presentation.base, model.cell_keys[static_cast<std::size_t>(c)]);
}

Slice slice(const SlicePresentation& p, int dim) {
  const bool under = p.side == SliceSide::under;
  const FinSSet& C = *p.base;
  const FinSSet& K = p.anchor.source();
  if (!(p.anchor.target() == C)) throw CompositionError("anchor does not land in the base");
  const int need = top_dim(K) + dim + 1;
  if (C.truncation() < need) {
    throw TruncationError("base truncated at " + std::to_string(C.truncation()) + "; slice up to dimension " +
                          std::to_string(dim) + " needs " + std::to_string(need));
  }

  std::vector<SSetPtr> simplices;
  std::vector<std::shared_ptr<const Join>> joins;
  for (int n = 0; n <= dim; ++n) {
    simplices.push_back(std::make_shared<const FinSSet>(standard_simplex(n)));
    joins.push_back(under ? std::make_shared<const Join>(p.anchor.source_ptr(), simplices.back())
                          : std::make_shared<const Join>(simplices.back(), p.anchor.source_ptr()));
  }
  auto kpart = [under](const Join& J, CellId c) { return under ? J.parts(c).first : J.parts(c).second; };
  auto dpart = [under](const Join& J, CellId c) { return under ? J.parts(c).second : J.parts(c).first; };
  auto top_of = [&](int n) {
    const Join& J = *joins[static_cast<std::size_t>(n)];
    const CellId top = static_cast<CellId>(simplices[static_cast<std::size_t>(n)]->cell_count() - 1);
    return under ? J.cell_of(-1, top) : J.cell_of(top, -1);
  };

  const SimplexIndex H(C, need);

  auto enumerate = [&](int n) {
    const Join& J = *joins[static_cast<std::size_t>(n)];
    const FinSSet& X = *J.sset();
    std::vector<Slice::Key> out;
    Slice::Key key(X.cell_count());
    std::function<void(std::size_t)> fill = [&](std::size_t c) {
      if (c == X.cell_count()) {
        out.push_back(key);
        return;
      }
      const auto cell = static_cast<CellId>(c);
      if (dpart(J, cell) < 0) {
        key[c] = p.anchor[kpart(J, cell)];
        fill(c + 1);
        return;
      }
      const int d = X.dim(cell);
      std::vector<int> want;
      for (const auto& f : X.faces(cell)) {
        if (d == 0) break;
        want.push_back(H.index_of(apply_operator(C, key[static_cast<std::size_t>(f.cell)], f.epi)));
      }
      for (int idx = 0; idx < H.count(d); ++idx) {
        bool ok = true;
        for (int t = 0; t < static_cast<int>(want.size()) && ok; ++t) ok = H.face(d, idx, t) == want[static_cast<std::size_t>(t)];
        if (!ok) continue;
        key[c] = H.at(d, idx);
        fill(c + 1);
      }
    };
    fill(0);
    return out;
  };

  auto act = [&](const Slice::Key& key, const MonotoneMap& psi) {
    const int m = psi.source_arity(), n = psi.target_arity();
    const Join& Jm = *joins[static_cast<std::size_t>(m)];
    const Join& Jn = *joins[static_cast<std::size_t>(n)];
    const FinSSet& Dm = *simplices[static_cast<std::size_t>(m)];
    const FinSSet& Dn = *simplices[static_cast<std::size_t>(n)];
    Slice::Key out;
    for (std::size_t c = 0; c < Jm.sset()->cell_count(); ++c) {
      const auto cell = static_cast<CellId>(c);
      const CellId kc = kpart(Jm, cell), dc = dpart(Jm, cell);
      const std::optional<SimplexRef> ks = kc < 0 ? std::nullopt : std::optional(K.simplex(kc));
      const std::optional<SimplexRef> ds = dc < 0 ? std::nullopt : std::optional(image_in_simplex(Dm, dc, Dn, psi));
      const SimplexRef img = under ? Jn.simplex_of(ks, ds) : Jn.simplex_of(ds, ks);
      out.push_back(apply_operator(C, key[static_cast<std::size_t>(img.cell)], img.epi));
    }
    return out;
  };

  const bool point = K.cell_count() == 1;
  auto name = [&](const Slice::Key& key, int n, int idx) {
    if (point) {
      const Join& J = *joins[static_cast<std::size_t>(n)];
      const CellId top = static_cast<CellId>(simplices[static_cast<std::size_t>(n)]->cell_count() - 1);
      return describe(C, key[static_cast<std::size_t>(under ? J.cell_of(0, top) : J.cell_of(top, 0))]);
    }
    return "c" + std::to_string(n) + "_" + std::to_string(idx);
  };

  auto model = build_presheaf<Slice::Key>(dim, enumerate, act, name);
  std::vector<SimplexRef> proj;
  for (std::size_t c = 0; c < model.cell_keys.size(); ++c) {
    const int n = model.sset->dim(static_cast<CellId>(c));
    proj.push_back(model.cell_keys[c][static_cast<std::size_t>(top_of(n))]);
  }
  SimplicialMap projection(model.sset, p.base, std::move(proj));
  return Slice{p, std::move(model), std::move(joins), std::move(projection)};
}

// ---------------------------------------------------------------------------
// One-object coslice

namespace {

// [m+1] -> [p+1]: 0 -> 0, j+1 -> e(j)+1.
MonotoneMap cone(const MonotoneMap& e) {
  std::vector<int> v{0};
  for (int j = 0; j <= e.source_arity(); ++j) v.push_back(e(j) + 1);
  return MonotoneMap(e.target_arity() + 1, v);
}

}  // namespace

SimplexRef Coslice::from_underlying(const SimplexRef& w) const {
  const int k = w.dim() - 1;
  if (k < 0) throw IndexError("a vertex of C has no coslice simplex");
  const MonotoneMap& e = w.epi;
  std::vector<int> v;
  if (e(0) == e(1)) {
    for (int j = 0; j <= k; ++j) v.push_back(e(j + 1));
    const CellId c = s0_cell.at(static_cast<std::size_t>(w.cell));
    if (c < 0) throw TruncationError("coslice simplex above truncation");
    return {MonotoneMap(e.target_arity(), v), c};
  }
  for (int j = 0; j <= k; ++j) v.push_back(e(j + 1) - 1);
  const CellId c = top_cell.at(static_cast<std::size_t>(w.cell));
  if (c < 0) throw TruncationError("coslice simplex above truncation");
  return {MonotoneMap(e.target_arity() - 1, v), c};
}

SimplexRef Coslice::underlying_of(const SimplexRef& s) const {
  return apply_operator(*base, underlying[static_cast<std::size_t>(s.cell)], cone(s.epi));
}

Coslice coslice_one_object_fastpath(const SSetPtr& Cp, int dim) {
  const FinSSet& C = *Cp;
  if (C.cells(0).size() != 1) throw ValidationError("fastpath coslice needs exactly one vertex");
  if (C.truncation() < dim + 1) {
    throw TruncationError("base truncated at " + std::to_string(C.truncation()) + "; coslice up to dimension " +
                          std::to_string(dim) + " needs " + std::to_string(dim + 1));
  }
  Coslice S{nullptr, Cp, {}, SimplicialMap::identity(Cp), std::vector<CellId>(C.cell_count(), -1),
            std::vector<CellId>(C.cell_count(), -1)};
  FinSSetBuilder b(dim);
  for (int n = 0; n <= dim; ++n) {
    auto add = [&](std::string name, const SimplexRef& u) {
      std::vector<SimplexRef> faces;
      if (n == 0) faces.push_back({});
      for (int i = 0; n > 0 && i <= n; ++i) faces.push_back(S.from_underlying(face(C, u, i + 1)));
      S.underlying.push_back(u);
      return b.add_cell(std::move(name), std::move(faces));
    };
    for (CellId c : C.cells(n)) {
      std::vector<int> epi{0};
      for (int j = 0; j <= n; ++j) epi.push_back(j);
      S.s0_cell[static_cast<std::size_t>(c)] = add("s0(" + C.name(c) + ")", {MonotoneMap(n, epi), c});
    }
    for (CellId c : C.cells(n + 1)) S.top_cell[static_cast<std::size_t>(c)] = add(C.name(c), C.simplex(c));
  }
  S.sset = std::make_shared<const FinSSet>(std::move(b).build());
  std::vector<SimplexRef> proj;
  for (const auto& u : S.underlying) proj.push_back(face(C, u, 0));
  S.projection = SimplicialMap(S.sset, Cp, std::move(proj));
  return S;
}

std::optional<SimplicialMap> compare_coslices(const Slice& generic, const Coslice& fast) {
  const FinSSet& G = *generic.sset();
  if (generic.presentation.side != SliceSide::under || generic.presentation.anchor.source().cell_count() != 1) return std::nullopt;
  std::vector<SimplexRef> assignment;
  for (std::size_t c = 0; c < G.cell_count(); ++c) {
    const int n = G.dim(static_cast<CellId>(c));
    const auto& key = generic.model.cell_keys[c];
    const Join& J = *generic.joins[static_cast<std::size_t>(n)];
    const CellId top = J.cell_of(0, static_cast<CellId>(J.right().cell_count() - 1));
    try {
      assignment.push_back(fast.from_underlying(key[static_cast<std::size_t>(top)]));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  SimplicialMap f(generic.sset(), fast.sset, std::move(assignment));
  if (!is_isomorphism(f)) return std::nullopt;
  return f;
}

EdgeAnatomy slice_edge_anatomy(const Coslice& S, const NerveModel& N, const SCat& D, const SimplexRef& edge) {
  if (edge.dim() != 1) throw IndexError("edge anatomy needs a 1-simplex");
  const LowSimplexData t = read_low_simplex(functor_of(N, D, S.underlying_of(edge)), D);
  return {t.parts.at("V01"), t.parts.at("V12"), t.parts.at("V02"), t.parts.at("g012")};
}

SimplexRef assemble_edge(const Coslice& S, const NerveModel& N, const SCat& D, const EdgeAnatomy& a) {
  const LowSimplexData t{2, {{"V01", a.V01}, {"V12", a.V12}, {"V02", a.V02}, {"g012", a.gamma}}};
  return S.from_underlying(nerve_simplex_of(N, D, assemble_low_simplex(t, D)));
}

}  // namespace qckit
