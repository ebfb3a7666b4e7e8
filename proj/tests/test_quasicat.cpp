#include <doctest.h>

#include <numeric>
#include <random>

#include "generators.hpp"
#include "qckit/monoid.hpp"
#include "qckit/poset.hpp"
#include "qckit/quasicat.hpp"

using namespace qckit;
using qckit::testing::random_sset;

namespace {

SSetPtr ptr(FinSSet X) { return std::make_shared<const FinSSet>(std::move(X)); }

// Components by union-find over nondegenerate edges.
std::size_t component_count(const FinSSet& X) {
  std::vector<int> parent(X.cell_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[static_cast<std::size_t>(a)] == a ? a : parent[static_cast<std::size_t>(a)] = find(parent[static_cast<std::size_t>(a)]); };
  if (X.truncation() >= 1)
    for (CellId e : X.cells(1)) {
      const auto f = X.faces(e);
      parent[static_cast<std::size_t>(find(f[0].cell))] = find(f[1].cell);
    }
  std::size_t roots = 0;
  for (CellId v : X.cells(0))
    if (find(v) == v) ++roots;
  return roots;
}

}  // namespace

TEST_CASE("standard simplices and poset nerves are quasicategories") {
  for (int n = 0; n <= 4; ++n) {
    const auto v = is_quasicategory_up_to(standard_simplex(n, 4), 4);
    CHECK(v.ok);
    CHECK_FALSE(v.witness.has_value());
  }
  std::mt19937_64 rng(6);
  std::bernoulli_distribution edge(0.5);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + trial % 4;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> leq;
    for (int a = 0; a < n; ++a) names.push_back(std::to_string(a));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (edge(rng)) leq.emplace_back(a, b);
    const PosetNerve N(FinPoset(names, leq), 3);
    CHECK(is_quasicategory_up_to(*N.sset(), 3).ok);
  }
}

TEST_CASE("outer horns separate Kan complexes") {
  const auto v = is_kan_up_to(standard_simplex(1, 2), 2);
  CHECK_FALSE(v.ok);
  REQUIRE(v.witness.has_value());
  CHECK((v.witness->i == 0 || v.witness->i == v.witness->n));
  for (int n = 1; n <= 4; ++n) CHECK(is_kan_up_to(cyclic_group_nerve(n, 3), 3).ok);
}

TEST_CASE("the boundary of the 2-simplex has an unfillable inner horn") {
  const FinSSet B = boundary(2);
  const auto v = is_quasicategory_up_to(B, 2);
  CHECK_FALSE(v.ok);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->n == 2);
  CHECK(v.witness->i == 1);
  CHECK_FALSE(find_filler(B, *v.witness).has_value());
  CHECK_FALSE(describe(B, *v.witness).empty());
}

TEST_CASE("horn checks reject incompatible faces") {
  const FinSSet D = standard_simplex(2);
  const auto v = [&](const char* name) { return D.simplex(D.at(name)); };
  HornProblem bad{2, 1, {v("12"), SimplexRef{}, v("02")}};
  CHECK_THROWS_AS(check_horn(D, bad), ValidationError);
  HornProblem good{2, 1, {v("12"), SimplexRef{}, v("01")}};
  CHECK_NOTHROW(check_horn(D, good));
  const auto f = find_filler(D, good);
  REQUIRE(f.has_value());
  CHECK(f->cell == D.at("012"));
}

TEST_CASE("invertible edges and cores") {
  auto D = ptr(standard_simplex(2, 3));
  const CoreResult cD = core(D, 3);
  CHECK(cD.core->cell_counts() == std::vector<std::size_t>{3, 0, 0, 0});
  CHECK(cD.invertible_edges.empty());
  CHECK(validate_map(cD.inclusion).ok());
  for (int n = 2; n <= 4; ++n) {
    auto G = ptr(cyclic_group_nerve(n, 3));
    const CoreResult c = core(G, 3);
    CHECK(c.core->cell_counts() == G->cell_counts());
    CHECK(c.invertible_edges.size() == G->cells(1).size());
    for (CellId e : G->cells(1)) {
      const auto w = is_invertible_edge(*G, G->simplex(e));
      REQUIRE(w.has_value());
      CHECK(face(*G, w->sigma, 2) == G->simplex(e));
      CHECK(face(*G, w->sigma, 0) == w->g);
      CHECK(face(*G, w->tau, 0) == G->simplex(e));
    }
  }
  // {1, a} with a a = a: the edge a is not invertible.
  const GradedSimplicialMonoid M(discrete_monoid_spec(GradeMonoid{{"1", "a"}, 0, {{0, 1}, {1, 1}}}, 3));
  const NerveModel N = simplicial_nerve(deloop(M), 3);
  const CoreResult cN = core(N.sset, 3);
  CHECK(cN.core->cell_counts() == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("core is idempotent") {
  std::mt19937_64 rng(14);
  std::vector<SSetPtr> samples{ptr(cyclic_group_nerve(3, 3))};
  for (int t = 0; t < 3; ++t) {
    const GradedSimplicialMonoid M(qckit::testing::random_monoid_spec(rng));
    samples.push_back(simplicial_nerve(deloop(M), 3).sset);
  }
  for (int t = 0; t < 10; ++t) samples.push_back(ptr(random_sset(rng, 3)));
  for (const auto& X : samples) {
    const CoreResult once = core(X, 3);
    const CoreResult twice = core(once.core, 3);
    CHECK(once.core->cell_counts() == twice.core->cell_counts());
    CHECK(is_isomorphism(twice.inclusion));
  }
}

TEST_CASE("pi0 agrees with union-find") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    const FinSSet X = random_sset(rng, 2);
    const auto comps = pi0(X);
    CHECK(comps.size() == component_count(X));
    std::size_t total = 0;
    for (const auto& c : comps) {
      total += c.size();
      CHECK(std::is_sorted(c.begin(), c.end()));
    }
    CHECK(total == X.cells(0).size());
  }
}

TEST_CASE("fundamental groups of cyclic group nerves") {
  for (int n = 1; n <= 6; ++n) {
    const FinSSet G = cyclic_group_nerve(n, 3);
    const FundamentalGroup pi = pi1(G, 0);
    CHECK(pi.group.order() == n);
    CHECK(validate(pi.group).ok());
    CHECK(pi.representatives.size() == static_cast<std::size_t>(n));
    CHECK(group_isomorphism(pi.group, cyclic_group(n)).has_value());
  }
  CHECK_FALSE(group_isomorphism(cyclic_group(4), cyclic_group(2)).has_value());
  FiniteGroup klein{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, 0};
  CHECK(validate(klein).ok());
  CHECK_FALSE(group_isomorphism(klein, cyclic_group(4)).has_value());
  CHECK(group_isomorphism(klein, klein).has_value());
  // Two loops with no 2-cells: the composite horn has no filler.
  FinSSetBuilder b(2);
  const CellId v = b.add_vertex("*");
  b.add_cell("a", {{MonotoneMap(), v}, {MonotoneMap(), v}});
  b.add_cell("b", {{MonotoneMap(), v}, {MonotoneMap(), v}});
  CHECK_THROWS_AS(pi1(std::move(b).build(), v), Error);
}
