#include "qckit/sset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qckit {

// ---------------------------------------------------------------------------
// FinSSet

const FinSSet::Cell& FinSSet::cell(CellId c) const {
  if (c < 0 || static_cast<std::size_t>(c) >= cells_.size()) {
    throw ValidationError("reference to unknown cell #" + std::to_string(c));
  }
  return cells_[static_cast<std::size_t>(c)];
}

std::span<const CellId> FinSSet::cells(int dim) const {
  if (dim < 0) return {};
  if (dim > truncation_) {
    throw TruncationError("dimension " + std::to_string(dim) + " exceeds truncation " +
                          std::to_string(truncation_));
  }
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::optional<CellId> FinSSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CellId FinSSet::at(std::string_view name) const {
  if (auto c = find(name)) return *c;
  throw ValidationError("unknown cell '" + std::string(name) + "'");
}

std::vector<std::size_t> FinSSet::cell_counts() const {
  std::vector<std::size_t> out;
  for (const auto& d : by_dim_) out.push_back(d.size());
  return out;
}

bool operator==(const FinSSet& a, const FinSSet& b) {
  if (a.truncation_ != b.truncation_ || a.cells_.size() != b.cells_.size()) return false;
  for (std::size_t i = 0; i < a.cells_.size(); ++i) {
    const auto& x = a.cells_[i];
    const auto& y = b.cells_[i];
    if (x.name != y.name || x.dim != y.dim || x.faces != y.faces) return false;
  }
  return true;
}

FinSSetBuilder::FinSSetBuilder(int truncation) {
  if (truncation < 0) throw TruncationError("negative truncation");
  set_.truncation_ = truncation;
  set_.by_dim_.assign(static_cast<std::size_t>(truncation + 1), {});
}

CellId FinSSetBuilder::add_vertex(std::string name) { return add_cell(std::move(name), {{}}); }

CellId FinSSetBuilder::add_cell(std::string name, std::vector<SimplexRef> faces) {
  // A vertex is passed as a single placeholder face; strip it.
  int dim = static_cast<int>(faces.size()) - 1;
  if (dim == 0) faces.clear();
  if (dim > set_.truncation_) {
    throw TruncationError("cell '" + name + "' of dimension " + std::to_string(dim) +
                          " exceeds truncation " + std::to_string(set_.truncation_));
  }
  if (set_.index_.contains(name)) throw ValidationError("duplicate cell name '" + name + "'");
  for (const auto& f : faces) {
    if (f.cell < 0 || static_cast<std::size_t>(f.cell) >= set_.cells_.size()) {
      throw ValidationError("cell '" + name + "' has a face referencing an unknown cell");
    }
    if (f.dim() != dim - 1 || f.epi.target_arity() != set_.cells_[static_cast<std::size_t>(f.cell)].dim ||
        !f.epi.is_surjective()) {
      throw ValidationError("cell '" + name + "' has a malformed face");
    }
  }
  const auto id = static_cast<CellId>(set_.cells_.size());
  set_.index_.emplace(name, id);
  set_.cells_.push_back({std::move(name), dim, std::move(faces)});
  set_.by_dim_[static_cast<std::size_t>(dim)].push_back(id);
  return id;
}

FinSSet FinSSetBuilder::build() && { return std::move(set_); }

// ---------------------------------------------------------------------------
// Normalization algebra

namespace {

SimplexRef apply_mono(const FinSSet& X, CellId c, const MonotoneMap& mono) {
  if (mono.is_identity()) return X.simplex(c);
  const int n = mono.target_arity();
  // Peel off the coface skipping the largest missing value.
  int missing = n;
  for (int j = mono.source_arity(); j >= 0 && mono(j) == missing; --j) --missing;
  std::array<int, kMaxArity + 1> v{};
  for (int j = 0; j <= mono.source_arity(); ++j)
    v[static_cast<std::size_t>(j)] = mono(j) < missing ? mono(j) : mono(j) - 1;
  MonotoneMap rest(n - 1, std::span<const int>(v.data(), static_cast<std::size_t>(mono.source_arity() + 1)));
  return apply_operator(X, X.faces(c)[static_cast<std::size_t>(missing)], rest);
}

}  // namespace

SimplexRef apply_operator(const FinSSet& X, const SimplexRef& s, const MonotoneMap& alpha) {
  if (alpha.target_arity() != s.dim()) {
    throw CompositionError("operator " + alpha.to_string() + " does not apply to a " +
                           std::to_string(s.dim()) + "-simplex");
  }
  if (alpha.source_arity() > X.truncation()) {
    throw TruncationError("dimension " + std::to_string(alpha.source_arity()) +
                          " exceeds truncation " + std::to_string(X.truncation()));
  }
  if (X.dim(s.cell) != s.epi.target_arity()) throw ValidationError("malformed simplex reference");
  auto [epi, mono] = epi_mono_factor(compose(s.epi, alpha));
  SimplexRef r = apply_mono(X, s.cell, mono);
  return {compose(r.epi, epi), r.cell};
}

SimplexRef face(const FinSSet& X, const SimplexRef& s, int i) {
  return apply_operator(X, s, face_generator(s.dim(), i));
}

SimplexRef degeneracy(const FinSSet& X, const SimplexRef& s, int i) {
  return apply_operator(X, s, degeneracy_generator(s.dim(), i));
}

CellId vertex_of(const FinSSet& X, const SimplexRef& s, int v) {
  return apply_operator(X, s, MonotoneMap::constant(0, s.dim(), v)).cell;
}

std::vector<SimplexRef> enumerate_simplices(const FinSSet& X, int k) {
  std::vector<SimplexRef> out;
  if (k < 0) return out;
  if (k > X.truncation()) {
    throw TruncationError("dimension " + std::to_string(k) + " exceeds truncation " +
                          std::to_string(X.truncation()));
  }
  for (int m = 0; m <= k; ++m) {
    const auto surj = all_surjections(k, m);
    for (CellId c : X.cells(m))
      for (const auto& e : surj) out.push_back({e, c});
  }
  return out;
}

std::string describe(const FinSSet& X, const SimplexRef& s) {
  if (s.is_nondegenerate()) return X.name(s.cell);
  std::string out = X.name(s.cell) + "@[";
  for (int i = 0; i <= s.dim(); ++i) out += (i ? "," : "") + std::to_string(s.epi(i));
  return out + "]";
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

std::string image_name(const std::vector<int>& img, int n) {
  std::string out;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (n >= 10 && i) out += ',';
    out += std::to_string(img[i]);
  }
  return out;
}

// Cells of Delta^n as images; `keep` decides which to include.
FinSSet simplex_like(int n, int truncation, const std::function<bool(const std::vector<int>&)>& keep) {
  FinSSetBuilder b(truncation);
  for (int m = 0; m <= n; ++m) {
    for (const auto& f : all_injections(m, n)) {
      auto img = f.image();
      if (!keep(img)) continue;
      std::vector<SimplexRef> faces;
      if (m == 0) {
        faces.push_back({});
      } else {
        for (int i = 0; i <= m; ++i) {
          auto sub = img;
          sub.erase(sub.begin() + i);
          faces.push_back({MonotoneMap::identity(m - 1), *b.find(image_name(sub, n))});
        }
      }
      b.add_cell(image_name(img, n), std::move(faces));
    }
  }
  return std::move(b).build();
}

}  // namespace

FinSSet empty_sset(int truncation) { return std::move(FinSSetBuilder(truncation)).build(); }

FinSSet standard_simplex(int n, int truncation) {
  if (n < 0) throw IndexError("negative simplex dimension");
  return simplex_like(n, std::max(n, truncation), [](const auto&) { return true; });
}

SimplexRef standard_simplex_ref(const FinSSet& simplex, int n, const MonotoneMap& f) {
  if (f.target_arity() != n) throw CompositionError("operator does not land in this simplex");
  const auto [epi, mono] = epi_mono_factor(f);
  return {epi, simplex.at(image_name(mono.image(), n))};
}

FinSSet boundary(int n) {
  if (n < 0) throw IndexError("negative simplex dimension");
  return simplex_like(n, n, [n](const auto& img) { return static_cast<int>(img.size()) <= n; });
}

FinSSet horn(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw IndexError("horn index out of range");
  return simplex_like(n, n, [n, i](const auto& img) {
    if (static_cast<int>(img.size()) == n + 1) return false;
    if (static_cast<int>(img.size()) == n && !std::ranges::count(img, i)) return false;
    return true;
  });
}

FinSSet skeleton(const FinSSet& X, int n) {
  if (n > X.truncation()) throw TruncationError("skeleton above truncation");
  FinSSetBuilder b(n);
  for (int d = 0; d <= n; ++d) {
    for (CellId c : X.cells(d)) {
      auto faces = std::vector<SimplexRef>(X.faces(c).begin(), X.faces(c).end());
      if (d == 0) faces.push_back({});
      b.add_cell(X.name(c), std::move(faces));
    }
  }
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate(const FinSSet& X) {
  ValidationReport report;
  std::set<std::string> seen;
  for (int d = 0; d <= X.truncation(); ++d) {
    for (CellId c : X.cells(d)) {
      if (!seen.insert(X.name(c)).second)
        report.violations.push_back("cell '" + X.name(c) + "' listed twice");
      const auto faces = X.faces(c);
      if (static_cast<int>(faces.size()) != (d == 0 ? 0 : d + 1)) {
        report.violations.push_back("cell '" + X.name(c) + "' has wrong number of faces");
        continue;
      }
      for (const auto& f : faces) {
        if (f.cell < 0 || static_cast<std::size_t>(f.cell) >= X.cell_count() ||
            X.dim(f.cell) != f.epi.target_arity() || !f.epi.is_surjective() || f.dim() != d - 1) {
          report.violations.push_back("cell '" + X.name(c) + "' has a malformed face");
        }
      }
    }
  }
  if (!report.ok()) return report;

  for (int d = 2; d <= X.truncation(); ++d) {
    for (CellId c : X.cells(d)) {
      const SimplexRef s = X.simplex(c);
      for (int j = 1; j <= d; ++j) {
        for (int i = 0; i < j; ++i) {
          const SimplexRef lhs = face(X, face(X, s, j), i);
          const SimplexRef rhs = face(X, face(X, s, i), j - 1);
          if (lhs != rhs) {
            report.violations.push_back(
                "cell '" + X.name(c) + "': d" + std::to_string(i) + " d" + std::to_string(j) +
                " = " + describe(X, lhs) + " but d" + std::to_string(j - 1) + " d" +
                std::to_string(i) + " = " + describe(X, rhs));
          }
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Maps

SimplicialMap::SimplicialMap(SSetPtr source, SSetPtr target, std::vector<SimplexRef> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_->cell_count()) {
    throw ValidationError("simplicial map must assign every source cell");
  }
  for (std::size_t c = 0; c < assignment_.size(); ++c) {
    const auto& s = assignment_[c];
    if (s.dim() != source_->dim(static_cast<CellId>(c)) || s.dim() > target_->truncation() ||
        s.cell < 0 || static_cast<std::size_t>(s.cell) >= target_->cell_count() ||
        target_->dim(s.cell) != s.epi.target_arity()) {
      throw ValidationError("bad image for cell '" + source_->name(static_cast<CellId>(c)) + "'");
    }
  }
}

SimplicialMap SimplicialMap::identity(SSetPtr X) {
  std::vector<SimplexRef> a;
  for (std::size_t c = 0; c < X->cell_count(); ++c) a.push_back(X->simplex(static_cast<CellId>(c)));
  return SimplicialMap(X, X, std::move(a));
}

SimplexRef SimplicialMap::operator()(const SimplexRef& s) const {
  return apply_operator(*target_, assignment_.at(static_cast<std::size_t>(s.cell)), s.epi);
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target_ptr() != g.source_ptr() && !(f.target() == g.source())) {
    throw CompositionError("simplicial maps are not composable");
  }
  std::vector<SimplexRef> a;
  for (const auto& s : f.assignment()) a.push_back(g(s));
  return SimplicialMap(f.source_ptr(), g.target_ptr(), std::move(a));
}

ValidationReport validate_map(const SimplicialMap& f) {
  ValidationReport report;
  const FinSSet& X = f.source();
  const FinSSet& Y = f.target();
  for (int d = 1; d <= X.truncation(); ++d) {
    for (CellId c : X.cells(d)) {
      for (int i = 0; i <= d; ++i) {
        const SimplexRef lhs = f(X.faces(c)[static_cast<std::size_t>(i)]);
        const SimplexRef rhs = face(Y, f[c], i);
        if (lhs != rhs) {
          report.violations.push_back("map fails on d" + std::to_string(i) + " of '" + X.name(c) +
                                      "': " + describe(Y, lhs) + " vs " + describe(Y, rhs));
        }
      }
    }
  }
  return report;
}

bool is_isomorphism(const SimplicialMap& f) {
  const FinSSet& X = f.source();
  const FinSSet& Y = f.target();
  if (X.truncation() != Y.truncation() || X.cell_counts() != Y.cell_counts()) return false;
  std::vector<bool> hit(Y.cell_count(), false);
  for (std::size_t c = 0; c < X.cell_count(); ++c) {
    const auto& s = f[static_cast<CellId>(c)];
    if (!s.is_nondegenerate() || hit[static_cast<std::size_t>(s.cell)]) return false;
    hit[static_cast<std::size_t>(s.cell)] = true;
  }
  return validate_map(f).ok();
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const FinSSet& X, const FinSSet& Y) : X_(X), Y_(Y) {
    // Order source cells so that each comes after its faces and vertices are
    // interleaved with the cells they span.
    std::vector<int> vpos(X.cell_count(), 0);
    int p = 0;
    for (CellId v : X.cells(0)) vpos[static_cast<std::size_t>(v)] = p++;
    std::vector<std::tuple<int, int, CellId>> keyed;
    for (int d = 0; d <= X.truncation(); ++d) {
      for (CellId c : X.cells(d)) {
        int top = 0;
        for (int v = 0; v <= d; ++v)
          top = std::max(top, vpos[static_cast<std::size_t>(vertex_of(X, X.simplex(c), v))]);
        keyed.emplace_back(top, d, c);
      }
    }
    std::ranges::sort(keyed);
    for (auto& [t, d, c] : keyed) order_.push_back(c);
    signature_x_ = signatures(X);
    signature_y_ = signatures(Y);
    assign_.assign(X.cell_count(), -1);
    used_.assign(Y.cell_count(), false);
  }

  std::optional<std::vector<SimplexRef>> run() {
    if (!rec(0)) return std::nullopt;
    std::vector<SimplexRef> out;
    for (std::size_t c = 0; c < assign_.size(); ++c) out.push_back(Y_.simplex(assign_[c]));
    return out;
  }

 private:
  static std::vector<std::pair<int, int>> signatures(const FinSSet& S) {
    std::vector<std::pair<int, int>> sig(S.cell_count(), {0, 0});
    if (S.truncation() < 1) return sig;
    for (CellId e : S.cells(1)) {
      sig[static_cast<std::size_t>(vertex_of(S, S.simplex(e), 0))].first++;
      sig[static_cast<std::size_t>(vertex_of(S, S.simplex(e), 1))].second++;
    }
    return sig;
  }

  bool fits(CellId c, CellId y) const {
    const int d = X_.dim(c);
    if (d == 0) return signature_x_[static_cast<std::size_t>(c)] == signature_y_[static_cast<std::size_t>(y)];
    for (int i = 0; i <= d; ++i) {
      const SimplexRef& fx = X_.faces(c)[static_cast<std::size_t>(i)];
      const SimplexRef mapped = apply_operator(Y_, Y_.simplex(assign_[static_cast<std::size_t>(fx.cell)]), fx.epi);
      if (mapped != Y_.faces(y)[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }

  bool rec(std::size_t pos) {
    if (pos == order_.size()) return true;
    const CellId c = order_[pos];
    for (CellId y : Y_.cells(X_.dim(c))) {
      if (used_[static_cast<std::size_t>(y)] || !fits(c, y)) continue;
      used_[static_cast<std::size_t>(y)] = true;
      assign_[static_cast<std::size_t>(c)] = y;
      if (rec(pos + 1)) return true;
      used_[static_cast<std::size_t>(y)] = false;
      assign_[static_cast<std::size_t>(c)] = -1;
    }
    return false;
  }

  const FinSSet& X_;
  const FinSSet& Y_;
  std::vector<CellId> order_;
  std::vector<std::pair<int, int>> signature_x_, signature_y_;
  std::vector<CellId> assign_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<SimplicialMap> iso_search(const SSetPtr& X, const SSetPtr& Y, int dim_cap) {
  const int cap = std::min({dim_cap, X->truncation(), Y->truncation()});
  SSetPtr Xs = X->truncation() == cap ? X : std::make_shared<const FinSSet>(skeleton(*X, cap));
  SSetPtr Ys = Y->truncation() == cap ? Y : std::make_shared<const FinSSet>(skeleton(*Y, cap));
  if (Xs->cell_counts() != Ys->cell_counts()) return std::nullopt;
  auto found = IsoSearch(*Xs, *Ys).run();
  if (!found) return std::nullopt;
  return SimplicialMap(Xs, Ys, std::move(*found));
}

// ---------------------------------------------------------------------------
// Bilevel maps

BilevelMap::BilevelMap(SSetPtr left, SSetPtr right, SSetPtr target, Fn fn)
    : left_(std::move(left)), right_(std::move(right)), target_(std::move(target)), fn_(std::move(fn)) {}

SimplexRef BilevelMap::operator()(const SimplexRef& a, const SimplexRef& b) const {
  if (a.dim() != b.dim()) throw CompositionError("bilevel map applied to simplices of different dimension");
  return fn_(a, b);
}

ValidationReport validate_bilevel(const BilevelMap& f, int max_level) {
  ValidationReport report;
  const int top = std::min({max_level, f.left().truncation(), f.right().truncation(), f.target().truncation()});
  auto fail = [&](const std::string& msg) {
    if (report.violations.size() < 20) report.violations.push_back(msg);
  };
  for (int k = 0; k <= top; ++k) {
    const auto xs = enumerate_simplices(f.left(), k);
    const auto ys = enumerate_simplices(f.right(), k);
    for (const auto& a : xs) {
      for (const auto& b : ys) {
        const SimplexRef r = f(a, b);
        if (r.dim() != k) {
          fail("bilevel map changes dimension");
          continue;
        }
        for (int i = 0; k >= 1 && i <= k; ++i) {
          if (f(face(f.left(), a, i), face(f.right(), b, i)) != face(f.target(), r, i)) {
            fail("bilevel map does not commute with d" + std::to_string(i) + " at (" +
                 describe(f.left(), a) + ", " + describe(f.right(), b) + ")");
          }
        }
        for (int i = 0; k + 1 <= top && i <= k; ++i) {
          if (f(degeneracy(f.left(), a, i), degeneracy(f.right(), b, i)) != degeneracy(f.target(), r, i)) {
            fail("bilevel map does not commute with s" + std::to_string(i) + " at (" +
                 describe(f.left(), a) + ", " + describe(f.right(), b) + ")");
          }
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// SimplexIndex

SimplexIndex::SimplexIndex(const FinSSet& X, int max_dim) : X_(&X), max_dim_(max_dim) {
  if (max_dim > X.truncation()) throw TruncationError("index above truncation");
  levels_.resize(static_cast<std::size_t>(max_dim + 1));
  for (int k = 0; k <= max_dim; ++k) {
    auto& L = levels_[static_cast<std::size_t>(k)];
    L.simplices = enumerate_simplices(X, k);
    for (std::size_t i = 0; i < L.simplices.size(); ++i) L.lookup.emplace(L.simplices[i], static_cast<int>(i));
  }
  for (int k = 1; k <= max_dim; ++k) {
    auto& L = levels_[static_cast<std::size_t>(k)];
    L.faces.reserve(L.simplices.size() * static_cast<std::size_t>(k + 1));
    for (const auto& s : L.simplices)
      for (int i = 0; i <= k; ++i) L.faces.push_back(index_of(qckit::face(X, s, i)));
  }
  for (int k = 0; k < max_dim; ++k) {
    auto& L = levels_[static_cast<std::size_t>(k)];
    for (const auto& s : L.simplices)
      for (int i = 0; i <= k; ++i) L.degens.push_back(index_of(qckit::degeneracy(X, s, i)));
  }
}

std::optional<int> SimplexIndex::find(const SimplexRef& s) const {
  if (s.dim() < 0 || s.dim() > max_dim_) return std::nullopt;
  const auto& L = levels_[static_cast<std::size_t>(s.dim())];
  auto it = L.lookup.find(s);
  if (it == L.lookup.end()) return std::nullopt;
  return it->second;
}

int SimplexIndex::index_of(const SimplexRef& s) const {
  if (auto i = find(s)) return *i;
  throw ValidationError("simplex is not indexed");
}

int SimplexIndex::degenerate_on_vertex(int k, int vertex_idx) const {
  return index_of({MonotoneMap::constant(k, 0, 0), at(0, vertex_idx).cell});
}

}  // namespace qckit
