#include "qckit/enriched.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <mutex>
#include <set>
#include <unordered_map>

namespace qckit {

// ---------------------------------------------------------------------------
// SCat

SCat::SCat(std::vector<std::string> objects, std::vector<SSetPtr> homs, std::vector<CellId> identities,
           std::vector<BilevelMap> comps)
    : objects_(std::move(objects)), homs_(std::move(homs)), identities_(std::move(identities)), comps_(std::move(comps)) {
  const std::size_t n = objects_.size();
  if (homs_.size() != n * n || identities_.size() != n || comps_.size() != n * n * n) {
    throw ValidationError("simplicial category data has inconsistent sizes");
  }
  for (std::size_t x = 0; x < n; ++x) {
    const FinSSet& H = *homs_[x * n + x];
    const CellId id = identities_[x];
    if (id < 0 || static_cast<std::size_t>(id) >= H.cell_count() || H.dim(id) != 0) {
      throw ValidationError("identity of '" + objects_[x] + "' is not a vertex of its endomorphisms");
    }
  }
}

SimplexRef SCat::identity_simplex(int x, int k) const { return {MonotoneMap::constant(k, 0, 0), identity(x)}; }

const BilevelMap& SCat::comp(int x, int y, int z) const {
  const auto n = static_cast<std::size_t>(object_count());
  const auto& c = comps_[(static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)) * n + static_cast<std::size_t>(z)];
  if (!c) throw CompositionError("no composition " + object(x) + " -> " + object(y) + " -> " + object(z));
  return c;
}

SimplexRef SCat::compose(int x, int y, int z, const SimplexRef& g, const SimplexRef& f) const {
  return comp(x, y, z)(g, f);
}

int SCat::hom_truncation() const {
  int t = kMaxArity;
  for (const auto& h : homs_)
    if (!h->empty()) t = std::min(t, h->truncation());
  return t;
}

ValidationReport validate(const SCat& D, int max_level) {
  ValidationReport report;
  const int n = D.object_count();
  auto note = [&](const std::string& msg) {
    if (report.violations.size() < 50) report.violations.push_back(msg);
  };
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (const auto& v : validate(D.hom(x, y)).violations) note("hom(" + D.object(x) + "," + D.object(y) + "): " + v);
    }
  }
  if (!report.ok()) return report;
  const int L = std::min(max_level, D.hom_truncation());

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (D.hom(x, y).empty() || D.hom(y, z).empty()) continue;
        try {
          for (const auto& v : validate_bilevel(D.comp(x, y, z), L).violations) note(v);
        } catch (const Error& e) {
          note(e.what());
        }
      }
    }
  }
  if (!report.ok()) return report;

  for (int k = 0; k <= L; ++k) {
    std::vector<std::vector<SimplexRef>> level(static_cast<std::size_t>(n * n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) level[static_cast<std::size_t>(x * n + y)] = enumerate_simplices(D.hom(x, y), k);
    auto simplices = [&](int x, int y) -> const std::vector<SimplexRef>& { return level[static_cast<std::size_t>(x * n + y)]; };

    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (const auto& f : simplices(x, y)) {
          if (D.compose(x, y, y, D.identity_simplex(y, k), f) != f || D.compose(x, x, y, f, D.identity_simplex(x, k)) != f) {
            note("identity of hom(" + D.object(x) + "," + D.object(y) + ") is not a strict unit at " +
                 describe(D.hom(x, y), f));
          }
        }
      }
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (int w = 0; w < n; ++w)
            for (const auto& a : simplices(z, w))
              for (const auto& b : simplices(y, z))
                for (const auto& c : simplices(x, y)) {
                  const SimplexRef lhs = D.compose(x, z, w, a, D.compose(x, y, z, b, c));
                  const SimplexRef rhs = D.compose(x, y, w, D.compose(y, z, w, a, b), c);
                  if (lhs != rhs) {
                    note("composition is not associative at level " + std::to_string(k) + " on (" +
                         describe(D.hom(z, w), a) + ", " + describe(D.hom(y, z), b) + ", " + describe(D.hom(x, y), c) + ")");
                  }
                }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Rigidification

Rigidification::Rigidification(int k) : k_(k) {
  if (k < 0 || k > kMaxRigidify) throw IndexError("rigidification arity out of range");
  const int n = k + 1;
  std::vector<SSetPtr> homs(static_cast<std::size_t>(n * n));
  nerves_.resize(static_cast<std::size_t>(n * n));
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      const auto idx = static_cast<std::size_t>(i * n + j);
      if (i <= j) {
        nerves_[idx] = std::make_unique<MappingNerve>(i, j, k, kMaxRigidify);
        homs[idx] = nerves_[idx]->sset();
      } else {
        homs[idx] = std::make_shared<const FinSSet>(empty_sset(kMaxRigidify));
      }
    }
  }
  std::vector<std::string> objects;
  std::vector<CellId> identities;
  for (int i = 0; i <= k; ++i) {
    objects.push_back(std::to_string(i));
    identities.push_back(0);
  }
  std::vector<BilevelMap> comps(static_cast<std::size_t>(n * n * n));
  for (int x = 0; x <= k; ++x)
    for (int y = x; y <= k; ++y)
      for (int z = y; z <= k; ++z)
        comps[static_cast<std::size_t>((x * n + y) * n + z)] = union_compose(mapping(y, z), mapping(x, y), mapping(x, z));
  scat_ = SCat(std::move(objects), std::move(homs), std::move(identities), std::move(comps));
}

const MappingNerve& Rigidification::mapping(int i, int j) const {
  if (i < 0 || j > k_ || i > j) throw IndexError("mapping poset P_{i,j} requires 0 <= i <= j <= k");
  return *nerves_[static_cast<std::size_t>(i * (k_ + 1) + j)];
}

const Rigidification& rigidification(int k) {
  if (k < 0 || k > kMaxRigidify) throw IndexError("rigidification arity out of range");
  static std::array<std::once_flag, kMaxRigidify + 1> flags;
  static std::array<std::unique_ptr<Rigidification>, kMaxRigidify + 1> cache;
  const auto idx = static_cast<std::size_t>(k);
  std::call_once(flags[idx], [&] { cache[idx] = std::make_unique<Rigidification>(k); });
  return *cache[idx];
}

// ---------------------------------------------------------------------------
// Functors

namespace {

// Images of the cells of C[l] under C[f], per pair (i, j), as simplices of
// the mapping nerves of C[k].
const std::vector<std::vector<SimplexRef>>& rigid_images(const MonotoneMap& f) {
  static std::mutex mu;
  static std::unordered_map<MonotoneMap, std::vector<std::vector<SimplexRef>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(f);
  if (it != cache.end()) return it->second;
  const int l = f.source_arity();
  const int k = f.target_arity();
  const Rigidification& src = rigidification(l);
  const Rigidification& dst = rigidification(k);
  std::vector<std::vector<SimplexRef>> out(static_cast<std::size_t>((l + 1) * (l + 1)));
  for (int i = 0; i <= l; ++i) {
    for (int j = i; j <= l; ++j) {
      const MappingNerve& S = src.mapping(i, j);
      const MappingNerve& T = dst.mapping(f(i), f(j));
      auto& vec = out[static_cast<std::size_t>(i * (l + 1) + j)];
      for (std::size_t c = 0; c < S.sset()->cell_count(); ++c) {
        auto subsets = S.subsets_of(S.sset()->simplex(static_cast<CellId>(c)));
        for (auto& s : subsets) s = image_subset(f, s);
        vec.push_back(T.simplex_of(subsets));
      }
    }
  }
  return cache.emplace(f, std::move(out)).first->second;
}

SimplicialFunctor empty_functor(int k) {
  SimplicialFunctor F;
  F.arity = k;
  F.objects.assign(static_cast<std::size_t>(k + 1), 0);
  F.homs.resize(static_cast<std::size_t>((k + 1) * (k + 1)));
  return F;
}

}  // namespace

SimplexRef functor_apply(const SimplicialFunctor& F, const SCat& D, int i, int j, const SimplexRef& s) {
  return apply_operator(D.hom(F.objects[static_cast<std::size_t>(i)], F.objects[static_cast<std::size_t>(j)]),
                        F.hom(i, j)[static_cast<std::size_t>(s.cell)], s.epi);
}

SimplicialMap hom_map(const SimplicialFunctor& F, const SCat& D, int i, int j) {
  return SimplicialMap(rigidification(F.arity).mapping(i, j).sset(),
                       D.hom_ptr(F.objects[static_cast<std::size_t>(i)], F.objects[static_cast<std::size_t>(j)]), F.hom(i, j));
}

SimplicialFunctor precompose(const SimplicialFunctor& F, const SCat& D, const MonotoneMap& f) {
  if (f.target_arity() != F.arity) throw CompositionError("operator does not apply to this functor");
  const int l = f.source_arity();
  const auto& images = rigid_images(f);
  SimplicialFunctor G = empty_functor(l);
  for (int i = 0; i <= l; ++i) G.objects[static_cast<std::size_t>(i)] = F.objects[static_cast<std::size_t>(f(i))];
  for (int i = 0; i <= l; ++i) {
    for (int j = i; j <= l; ++j) {
      auto& out = G.hom(i, j);
      for (const auto& s : images[static_cast<std::size_t>(i * (l + 1) + j)]) out.push_back(functor_apply(F, D, f(i), f(j), s));
    }
  }
  return G;
}

SimplicialFunctor identity_functor(int k) {
  const Rigidification& R = rigidification(k);
  SimplicialFunctor F = empty_functor(k);
  for (int i = 0; i <= k; ++i) {
    F.objects[static_cast<std::size_t>(i)] = i;
    for (int j = i; j <= k; ++j) {
      const FinSSet& N = *R.mapping(i, j).sset();
      for (std::size_t c = 0; c < N.cell_count(); ++c) F.hom(i, j).push_back(N.simplex(static_cast<CellId>(c)));
    }
  }
  return F;
}

SimplicialFunctor rigidify_map(const MonotoneMap& f) {
  return precompose(identity_functor(f.target_arity()), rigidify(f.target_arity()), f);
}

ValidationReport validate_functor(const SimplicialFunctor& F, const SCat& D) {
  ValidationReport report;
  const int k = F.arity;
  if (static_cast<int>(F.objects.size()) != k + 1 || static_cast<int>(F.homs.size()) != (k + 1) * (k + 1)) {
    report.violations.push_back("functor data has inconsistent sizes");
    return report;
  }
  const Rigidification& R = rigidification(k);
  for (int i = 0; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      try {
        report.merge(validate_map(hom_map(F, D, i, j)));
      } catch (const Error& e) {
        report.violations.push_back(std::string("hom component is not a map: ") + e.what());
      }
    }
    if (F.hom(i, i).size() != 1 || F.hom(i, i)[0] != D.identity_simplex(F.objects[static_cast<std::size_t>(i)], 0)) {
      report.violations.push_back("identity of " + std::to_string(i) + " is not preserved");
    }
  }
  if (!report.ok()) return report;
  const int L = std::max(0, k - 1);
  for (int i = 0; i <= k; ++i)
    for (int j = i; j <= k; ++j)
      for (int p = j; p <= k; ++p) {
        const auto& un = R.scat().comp(i, j, p);
        const int x = F.objects[static_cast<std::size_t>(i)], y = F.objects[static_cast<std::size_t>(j)],
                  z = F.objects[static_cast<std::size_t>(p)];
        for (int m = 0; m <= L; ++m)
          for (const auto& a : enumerate_simplices(*R.mapping(j, p).sset(), m))
            for (const auto& b : enumerate_simplices(*R.mapping(i, j).sset(), m)) {
              if (functor_apply(F, D, i, p, un(a, b)) !=
                  D.compose(x, y, z, functor_apply(F, D, j, p, a), functor_apply(F, D, i, j, b))) {
                report.violations.push_back("composition square fails for " + std::to_string(i) + "<=" +
                                            std::to_string(j) + "<=" + std::to_string(p));
              }
            }
      }
  return report;
}

namespace {

class FunctorEnumerator {
 public:
  FunctorEnumerator(int k, const SCat& D) : k_(k), D_(D), R_(rigidification(k)) {
    const int n = D.object_count();
    indexes_.resize(static_cast<std::size_t>(n * n));
    // Slots in order of increasing gap, then cell dimension.
    for (int gap = 1; gap <= k; ++gap) {
      for (int i = 0; i + gap <= k; ++i) {
        const int j = i + gap;
        const MappingNerve& M = R_.mapping(i, j);
        const FinSSet& N = *M.sset();
        for (int d = 0; d <= std::min(N.truncation(), gap - 1); ++d) {
          for (CellId c : N.cells(d)) {
            const Subset first = M.subsets_of(N.simplex(c)).front();
            const Subset interior = first & ~((1u << i) | (1u << j));
            slots_.push_back({i, j, c, interior ? std::countr_zero(interior) : -1});
          }
        }
      }
    }
  }

  std::vector<SimplicialFunctor> run() {
    F_ = empty_functor(k_);
    choose_objects(0);
    std::ranges::sort(out_);
    return std::move(out_);
  }

 private:
  struct Slot {
    int i, j;
    CellId cell;
    int split;  // interior vertex through which the cell decomposes, or -1
  };

  const SimplexIndex& index(int x, int y) {
    auto& p = indexes_[static_cast<std::size_t>(x * D_.object_count() + y)];
    if (!p) p = std::make_unique<SimplexIndex>(D_.hom(x, y), std::min(std::max(0, k_ - 1), D_.hom(x, y).truncation()));
    return *p;
  }

  int obj(int i) const { return F_.objects[static_cast<std::size_t>(i)]; }

  void choose_objects(int i) {
    if (i > k_) {
      for (int a = 0; a <= k_; ++a) {
        for (int b = a; b <= k_; ++b) F_.hom(a, b).assign(R_.mapping(a, b).sset()->cell_count(), SimplexRef{});
        F_.hom(a, a)[0] = D_.identity_simplex(obj(a), 0);
      }
      fill(0);
      return;
    }
    for (int x = 0; x < D_.object_count(); ++x) {
      bool ok = true;
      for (int a = 0; a < i && ok; ++a) ok = !D_.hom(obj(a), x).empty();
      if (!ok) continue;
      F_.objects[static_cast<std::size_t>(i)] = x;
      choose_objects(i + 1);
    }
  }

  void fill(std::size_t pos) {
    if (pos == slots_.size()) {
      out_.push_back(F_);
      return;
    }
    const Slot& s = slots_[pos];
    const MappingNerve& M = R_.mapping(s.i, s.j);
    const FinSSet& N = *M.sset();
    SimplexRef& value = F_.hom(s.i, s.j)[static_cast<std::size_t>(s.cell)];

    if (s.split >= 0) {
      const int m = s.split;
      const auto chain = M.subsets_of(N.simplex(s.cell));
      const Subset upper = ~((1u << m) - 1u);
      std::vector<Subset> right, left;
      for (Subset x : chain) {
        right.push_back(x & upper);
        left.push_back((x & ~upper) | (1u << m));
      }
      const SimplexRef a = functor_apply(F_, D_, m, s.j, R_.mapping(m, s.j).simplex_of(right));
      const SimplexRef b = functor_apply(F_, D_, s.i, m, R_.mapping(s.i, m).simplex_of(left));
      value = D_.compose(obj(s.i), obj(m), obj(s.j), a, b);
      fill(pos + 1);
      return;
    }

    const int d = N.dim(s.cell);
    const SimplexIndex& H = index(obj(s.i), obj(s.j));
    if (d == 0) {
      for (int v = 0; v < H.count(0); ++v) {
        value = H.at(0, v);
        fill(pos + 1);
      }
      return;
    }
    std::array<int, kMaxArity + 1> want{};
    for (int t = 0; t <= d; ++t)
      want[static_cast<std::size_t>(t)] = H.index_of(functor_apply(F_, D_, s.i, s.j, N.faces(s.cell)[static_cast<std::size_t>(t)]));
    for (int idx = 0; idx < H.count(d); ++idx) {
      bool ok = true;
      for (int t = 0; t <= d && ok; ++t) ok = H.face(d, idx, t) == want[static_cast<std::size_t>(t)];
      if (!ok) continue;
      value = H.at(d, idx);
      fill(pos + 1);
    }
  }

  int k_;
  const SCat& D_;
  const Rigidification& R_;
  std::vector<Slot> slots_;
  std::vector<std::unique_ptr<SimplexIndex>> indexes_;
  SimplicialFunctor F_;
  std::vector<SimplicialFunctor> out_;
};

}  // namespace

std::vector<SimplicialFunctor> enumerate_functors(int k, const SCat& D) {
  if (k < 0 || k > kMaxRigidify) throw IndexError("functor arity out of range");
  if (k >= 2 && D.hom_truncation() < k - 1) {
    throw TruncationError("homs truncated at " + std::to_string(D.hom_truncation()) + " cannot carry " +
                          std::to_string(k) + "-simplices of the nerve (need " + std::to_string(k - 1) + ")");
  }
  return FunctorEnumerator(k, D).run();
}

NerveModel simplicial_nerve(const SCat& D, int dim) {
  if (dim >= 2 && D.hom_truncation() < dim - 1) {
    throw TruncationError("homs truncated at " + std::to_string(D.hom_truncation()) + " cannot carry the nerve up to dimension " +
                          std::to_string(dim));
  }
  auto name = [&D](const SimplicialFunctor& F, int k, int idx) {
    if (k == 0) return D.object(F.objects[0]);
    if (k == 1) {
      const int x = F.objects[0], y = F.objects[1];
      const std::string label = D.hom(x, y).name(F.hom(0, 1)[0].cell);
      return D.object_count() == 1 ? label : D.object(x) + ">" + D.object(y) + ":" + label;
    }
    return "n" + std::to_string(k) + "_" + std::to_string(idx);
  };
  return build_presheaf<SimplicialFunctor>(
      dim, [&D](int k) { return enumerate_functors(k, D); },
      [&D](const SimplicialFunctor& F, const MonotoneMap& a) { return precompose(F, D, a); }, name);
}

SimplicialFunctor functor_of(const NerveModel& N, const SCat& D, const SimplexRef& s) {
  return precompose(N.cell_keys.at(static_cast<std::size_t>(s.cell)), D, s.epi);
}

SimplexRef nerve_simplex_of(const NerveModel& N, const SCat& D, const SimplicialFunctor& F) {
  const int k = F.arity;
  auto act = [&D](const SimplicialFunctor& G, const MonotoneMap& a) { return precompose(G, D, a); };
  auto none = [](int) { return std::vector<SimplicialFunctor>{}; };
  auto noname = [](const SimplicialFunctor&, int, int) { return std::string(); };
  PresheafBuilder<SimplicialFunctor, decltype(none), decltype(act), decltype(noname)> b(k, none, act, noname);
  return b.normalize(N, F, k);
}

// ---------------------------------------------------------------------------
// Low-dimensional classification

namespace {

// Name of the classification datum carried by an indecomposable cell of
// N(P_{i,j}), or "" for cells determined by composition.
std::string part_name(int i, int j, const std::vector<Subset>& chain) {
  const Subset ends = (1u << i) | (1u << j);
  if (chain.front() != ends) return "";
  auto ab = [](int a, int b) { return std::to_string(a) + std::to_string(b); };
  if (chain.size() == 1) return "V" + ab(i, j);
  if (j - i == 2 && chain.size() == 2) return "g" + subset_name(chain.back());
  if (j - i == 3) {
    if (chain.size() == 2) return chain.back() == 0b1111u << i ? "g12" : "g" + subset_name(chain.back());
    if (chain.size() == 3) return chain[1] == ((1u << i) | (1u << (i + 1)) | (1u << j)) ? "fillL" : "fillR";
  }
  throw IndexError("no classification datum for this cell");
}

void require_one_object(int k, const SCat& D) {
  if (D.object_count() != 1) throw Error("low-simplex classification needs a one-object category");
  if (k < 1 || k > 3) throw IndexError("low-simplex classification covers k = 1, 2, 3");
  if (D.hom_truncation() < k - 1) throw TruncationError("hom truncated too low for classification");
}

}  // namespace

std::vector<LowSimplexData> classify_low_simplices(int k, const SCat& D) {
  require_one_object(k, D);
  const FinSSet& H = D.hom(0, 0);
  const SimplexIndex I(H, std::min(2, std::max(0, k - 1)));
  auto sum = [&D](const SimplexRef& a, const SimplexRef& b) { return D.compose(0, 0, 0, a, b); };
  auto src = [&](const SimplexRef& e) { return face(H, e, 1); };
  auto tgt = [&](const SimplexRef& e) { return face(H, e, 0); };
  std::vector<SimplexRef> verts, edges, tris;
  for (int v = 0; v < I.count(0); ++v) verts.push_back(I.at(0, v));
  if (k >= 2)
    for (int e = 0; e < I.count(1); ++e) edges.push_back(I.at(1, e));
  if (k >= 3)
    for (int t = 0; t < I.count(2); ++t) tris.push_back(I.at(2, t));
  auto deg = [&](const SimplexRef& v) { return degeneracy(H, v, 0); };

  std::vector<LowSimplexData> out;
  if (k == 1) {
    for (const auto& v : verts) out.push_back({1, {{"V01", v}}});
  } else if (k == 2) {
    for (const auto& v01 : verts)
      for (const auto& v12 : verts) {
        const SimplexRef top = sum(v12, v01);
        for (const auto& g : edges)
          if (tgt(g) == top) out.push_back({2, {{"V01", v01}, {"V12", v12}, {"V02", src(g)}, {"g012", g}}});
      }
  } else {
    for (const auto& v01 : verts)
      for (const auto& v12 : verts)
        for (const auto& v23 : verts) {
          const SimplexRef v0123 = sum(v23, sum(v12, v01));
          for (const auto& g012 : edges) {
            if (tgt(g012) != sum(v12, v01)) continue;
            const SimplexRef v02 = src(g012);
            for (const auto& g123 : edges) {
              if (tgt(g123) != sum(v23, v12)) continue;
              const SimplexRef v13 = src(g123);
              const SimplexRef left_edge = sum(g123, deg(v01));
              const SimplexRef right_edge = sum(deg(v23), g012);
              for (const auto& g013 : edges) {
                if (tgt(g013) != sum(v13, v01)) continue;
                const SimplexRef v03 = src(g013);
                for (const auto& g023 : edges) {
                  if (tgt(g023) != sum(v23, v02) || src(g023) != v03) continue;
                  for (const auto& g12 : edges) {
                    if (src(g12) != v03 || tgt(g12) != v0123) continue;
                    for (const auto& fl : tris) {
                      if (face(H, fl, 0) != left_edge || face(H, fl, 1) != g12 || face(H, fl, 2) != g013) continue;
                      for (const auto& fr : tris) {
                        if (face(H, fr, 0) != right_edge || face(H, fr, 1) != g12 || face(H, fr, 2) != g023) continue;
                        out.push_back({3,
                                       {{"V01", v01}, {"V12", v12}, {"V23", v23}, {"V02", v02}, {"V13", v13},
                                        {"V03", v03}, {"g012", g012}, {"g123", g123}, {"g013", g013}, {"g023", g023},
                                        {"g12", g12}, {"fillL", fl}, {"fillR", fr}}});
                      }
                    }
                  }
                }
              }
            }
          }
        }
  }
  std::ranges::sort(out);
  return out;
}

SimplicialFunctor assemble_low_simplex(const LowSimplexData& t, const SCat& D) {
  const int k = t.arity;
  require_one_object(k, D);
  const Rigidification& R = rigidification(k);
  SimplicialFunctor F = empty_functor(k);
  for (int i = 0; i <= k; ++i) F.hom(i, i).push_back(D.identity_simplex(0, 0));
  for (int gap = 1; gap <= k; ++gap) {
    for (int i = 0; i + gap <= k; ++i) {
      const int j = i + gap;
      const MappingNerve& M = R.mapping(i, j);
      const FinSSet& N = *M.sset();
      auto& vals = F.hom(i, j);
      vals.assign(N.cell_count(), SimplexRef{});
      for (int d = 0; d < gap; ++d) {
        for (CellId c : N.cells(d)) {
          const auto chain = M.subsets_of(N.simplex(c));
          const std::string part = part_name(i, j, chain);
          if (!part.empty()) {
            vals[static_cast<std::size_t>(c)] = t.parts.at(part);
            continue;
          }
          const int m = std::countr_zero(chain.front() & ~((1u << i) | (1u << j)));
          const Subset upper = ~((1u << m) - 1u);
          std::vector<Subset> right, left;
          for (Subset x : chain) {
            right.push_back(x & upper);
            left.push_back((x & ~upper) | (1u << m));
          }
          vals[static_cast<std::size_t>(c)] = D.compose(0, 0, 0, functor_apply(F, D, m, j, R.mapping(m, j).simplex_of(right)),
                                                        functor_apply(F, D, i, m, R.mapping(i, m).simplex_of(left)));
        }
      }
    }
  }
  return F;
}

LowSimplexData read_low_simplex(const SimplicialFunctor& F, const SCat& D) {
  const int k = F.arity;
  require_one_object(k, D);
  const Rigidification& R = rigidification(k);
  LowSimplexData t{k, {}};
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      const MappingNerve& M = R.mapping(i, j);
      const FinSSet& N = *M.sset();
      for (int d = 0; d < j - i; ++d)
        for (CellId c : N.cells(d)) {
          const std::string part = part_name(i, j, M.subsets_of(N.simplex(c)));
          if (!part.empty()) t.parts[part] = F.hom(i, j)[static_cast<std::size_t>(c)];
        }
    }
  }
  return t;
}

ClassificationCheck verify_classification(int k, const SCat& D) {
  ClassificationCheck check;
  const auto functors = enumerate_functors(k, D);
  const auto tuples = classify_low_simplices(k, D);
  check.functor_count = functors.size();
  check.tuple_count = tuples.size();

  std::set<SimplicialFunctor> assembled;
  for (const auto& t : tuples) {
    SimplicialFunctor F = assemble_low_simplex(t, D);
    if (!validate_functor(F, D).ok()) check.problems.push_back("a classified tuple does not assemble to a functor");
    if (read_low_simplex(F, D) != t) check.problems.push_back("reading back an assembled tuple changes it");
    assembled.insert(std::move(F));
  }
  const std::set<SimplicialFunctor> enumerated(functors.begin(), functors.end());
  const std::set<LowSimplexData> tuple_set(tuples.begin(), tuples.end());
  for (const auto& F : functors) {
    const LowSimplexData t = read_low_simplex(F, D);
    if (!tuple_set.contains(t)) check.problems.push_back("an enumerated functor reads off to an unclassified tuple");
    else if (assemble_low_simplex(t, D) != F) check.problems.push_back("functor is not recovered from its tuple");
    if (k == 3) {
      const auto& M = rigidification(3).mapping(0, 3);
      const CellId top = M.sset()->at("0123");
      const SimplexRef expected =
          D.compose(0, 0, 0, t.parts.at("V23"), D.compose(0, 0, 0, t.parts.at("V12"), t.parts.at("V01")));
      if (F.hom(0, 3)[static_cast<std::size_t>(top)] != expected) check.decomposition_holds = false;
    }
  }
  check.bijective = check.problems.empty() && assembled == enumerated && tuple_set.size() == tuples.size() &&
                    enumerated.size() == functors.size();
  return check;
}

}  // namespace qckit
