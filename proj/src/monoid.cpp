#include "qckit/monoid.hpp"

#include <algorithm>
#include <set>

namespace qckit {

int GradeMonoid::index_of(const std::string& name) const {
  auto it = std::ranges::find(elements, name);
  if (it == elements.end()) throw ValidationError("unknown grade '" + name + "'");
  return static_cast<int>(it - elements.begin());
}

ValidationReport validate(const GradeMonoid& G) {
  ValidationReport r;
  const int n = G.size();
  if (n == 0) {
    r.violations.push_back("grade monoid is empty");
    return r;
  }
  if (G.unit < 0 || G.unit >= n) r.violations.push_back("unit is not an element");
  if (static_cast<int>(G.table.size()) != n) r.violations.push_back("table has the wrong number of rows");
  for (const auto& row : G.table) {
    if (static_cast<int>(row.size()) != n) r.violations.push_back("table row has the wrong length");
    for (int v : row)
      if (v < 0 || v >= n) r.violations.push_back("table entry out of range");
  }
  if (!r.ok()) return r;
  for (int a = 0; a < n; ++a) {
    if (G.mul(G.unit, a) != a || G.mul(a, G.unit) != a) r.violations.push_back("unit law fails at " + G.elements[a]);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
          r.violations.push_back("not associative at (" + G.elements[a] + ", " + G.elements[b] + ", " + G.elements[c] + ")");
  }
  if (!r.ok()) return r;
  for (int m = 0; m < n; ++m) {
    if (m == G.unit) continue;
    std::set<int> image;
    for (int x = 0; x < n; ++x) image.insert(G.mul(m, x));
    if (static_cast<int>(image.size()) == n) {
      std::string t;
      for (int x = 0; x < n; ++x) t += (x ? ", " : "") + G.elements[x] + " -> " + G.elements[G.mul(m, x)];
      r.violations.push_back("left translation by non-unit " + G.elements[m] + " is a bijection: " + t);
    }
  }
  return r;
}

GradeMonoid saturating_addition(int top) {
  GradeMonoid G;
  for (int a = 0; a <= top; ++a) G.elements.push_back(std::to_string(a) + (a == top && top > 0 ? "+" : ""));
  G.unit = 0;
  G.table.assign(static_cast<std::size_t>(top + 1), std::vector<int>(static_cast<std::size_t>(top + 1)));
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= top; ++b) G.table[a][b] = std::min(a + b, top);
  return G;
}

namespace {

using Tuple = std::vector<int>;

// alpha^* of a k-tuple in Z/n, for alpha: [m] -> [k].
Tuple act_tuple(const Tuple& x, const MonotoneMap& alpha, int n) {
  Tuple out;
  for (int t = 1; t <= alpha.source_arity(); ++t) {
    int s = 0;
    for (int p = alpha(t - 1); p < alpha(t); ++p) s += x[static_cast<std::size_t>(p)];
    out.push_back(s % n);
  }
  return out;
}

std::vector<Tuple> all_tuples(int n, int k) {
  std::vector<Tuple> out{Tuple{}};
  for (int t = 0; t < k; ++t) {
    std::vector<Tuple> next;
    for (const auto& x : out)
      for (int g = 0; g < n; ++g) {
        next.push_back(x);
        next.back().push_back(g);
      }
    out = std::move(next);
  }
  return out;
}

std::string tuple_name(const Tuple& x) {
  std::string s;
  for (std::size_t t = 0; t < x.size(); ++t) s += (t ? "," : "") + std::to_string(x[t]);
  return s;
}

}  // namespace

FinSSet cyclic_group_nerve(int n, int truncation) {
  if (n < 1) throw ValidationError("group order must be positive");
  auto model = build_presheaf<Tuple>(
      truncation, [n](int k) { return all_tuples(n, k); },
      [n](const Tuple& x, const MonotoneMap& a) { return act_tuple(x, a, n); },
      [](const Tuple& x, int k, int) { return k == 0 ? std::string("*") : tuple_name(x); });
  return *model.sset;
}

MonoidSpec default_monoid_spec() { return {saturating_addition(2), {1, 2, 2}, 3}; }

MonoidSpec discrete_monoid_spec(GradeMonoid G, int truncation) {
  const auto n = static_cast<std::size_t>(G.size());
  return {std::move(G), std::vector<int>(n, 1), truncation};
}

GradedSimplicialMonoid::GradedSimplicialMonoid(MonoidSpec spec) : spec_(std::move(spec)) {
  if (auto r = validate(spec_.grades); !r.ok()) throw ValidationError("grade monoid rejected: " + r.violations.front());
  const GradeMonoid& G = spec_.grades;
  if (static_cast<int>(spec_.components.size()) != G.size()) throw ValidationError("one component per grade is required");
  if (spec_.truncation < 0 || spec_.truncation > 6) throw ValidationError("truncation must lie in 0..6");
  for (int n : spec_.components)
    if (n < 1) throw ValidationError("component group order must be positive");
  if (group_order(G.unit) != 1) throw ValidationError("the unit component must be a point");
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b) {
      const int p = G.mul(a, b);
      for (int g : {a, b})
        if (group_order(g) != 1 && group_order(g) % group_order(p) != 0)
          throw ValidationError("no product Z/" + std::to_string(group_order(g)) + " -> Z/" + std::to_string(group_order(p)) +
                                " over " + G.elements[g] + " * ... = " + G.elements[p]);
    }

  const int grade_count = G.size();
  model_ = build_presheaf<Key>(
      spec_.truncation,
      [this, grade_count](int k) {
        std::vector<Key> out;
        for (int g = 0; g < grade_count; ++g)
          for (auto& x : all_tuples(group_order(g), k)) out.push_back({g, std::move(x)});
        return out;
      },
      [this](const Key& x, const MonotoneMap& a) { return Key{x.grade, act_tuple(x.tuple, a, group_order(x.grade))}; },
      [this](const Key& x, int k, int) {
        const std::string& g = grades().elements[static_cast<std::size_t>(x.grade)];
        return k == 0 ? g : g + "/" + tuple_name(x.tuple);
      });

  if (auto r = validate_product(std::min(1, spec_.truncation)); !r.ok())
    throw ValidationError("graded product rejected: " + r.violations.front());
}

FinSSet GradedSimplicialMonoid::component(int grade) const { return cyclic_group_nerve(group_order(grade), truncation()); }

GradedSimplicialMonoid::Key GradedSimplicialMonoid::key_of(const SimplexRef& s) const {
  const Key& base = model_.cell_keys.at(static_cast<std::size_t>(s.cell));
  return {base.grade, act_tuple(base.tuple, s.epi, group_order(base.grade))};
}

SimplexRef GradedSimplicialMonoid::simplex_of(const Key& k) const {
  const int n = group_order(k.grade);
  std::vector<int> epi{0};
  Tuple base;
  for (int g : k.tuple) {
    if (g < 0 || g >= n) throw ValidationError("tuple entry outside its group");
    epi.push_back(epi.back() + (g ? 1 : 0));
    if (g) base.push_back(g);
  }
  auto it = model_.key_to_cell.find(Key{k.grade, base});
  if (it == model_.key_to_cell.end()) throw TruncationError("simplex above truncation");
  return {MonotoneMap(epi.back(), epi), it->second};
}

CellId GradedSimplicialMonoid::unit() const { return model_.key_to_cell.at(Key{grades().unit, {}}); }

GradedSimplicialMonoid::Key GradedSimplicialMonoid::product(const Key& a, const Key& b) const {
  if (a.tuple.size() != b.tuple.size()) throw CompositionError("product of simplices of different dimensions");
  const int p = grades().mul(a.grade, b.grade);
  const int n = group_order(p);
  Key out{p, {}};
  for (std::size_t t = 0; t < a.tuple.size(); ++t)
    out.tuple.push_back((a.tuple[t] + b.tuple[t]) % n);
  return out;
}

SimplexRef GradedSimplicialMonoid::product(const SimplexRef& a, const SimplexRef& b) const {
  return simplex_of(product(key_of(a), key_of(b)));
}

BilevelMap GradedSimplicialMonoid::product_map() const {
  auto self = std::make_shared<const GradedSimplicialMonoid>(*this);
  return BilevelMap(total(), total(), total(), [self](const SimplexRef& a, const SimplexRef& b) { return self->product(a, b); });
}

ValidationReport GradedSimplicialMonoid::validate_product(int max_level) const {
  ValidationReport r;
  const FinSSet& X = *total();
  const SimplexRef u{MonotoneMap(), unit()};
  for (int k = 0; k <= std::min(max_level, truncation()); ++k) {
    const auto S = enumerate_simplices(X, k);
    const SimplexRef uk = apply_operator(X, u, MonotoneMap::constant(k, 0, 0));
    for (const auto& a : S) {
      if (product(uk, a) != a || product(a, uk) != a) r.violations.push_back("unit law fails at " + describe(X, a));
      for (const auto& b : S)
        for (const auto& c : S)
          if (product(product(a, b), c) != product(a, product(b, c)))
            r.violations.push_back("product not associative at (" + describe(X, a) + ", " + describe(X, b) + ", " +
                                   describe(X, c) + ")");
    }
  }
  return r;
}

SCat deloop(const GradedSimplicialMonoid& M) {
  return SCat({"*"}, {M.total()}, {M.unit()}, {M.product_map()});
}

}  // namespace qckit
