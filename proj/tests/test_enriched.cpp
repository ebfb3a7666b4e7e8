#include <doctest.h>

#include <map>
#include <random>

#include "generators.hpp"
#include "qckit/enriched.hpp"
#include "qckit/monoid.hpp"

using namespace qckit;
using qckit::testing::classical_monoid_nerve;

namespace {

// A poset as a category enriched in points and empties.
SCat poset_scat(const FinPoset& P, int trunc) {
  const int n = P.size();
  auto point = std::make_shared<const FinSSet>(standard_simplex(0, trunc));
  auto empty = std::make_shared<const FinSSet>(empty_sset(trunc));
  std::vector<SSetPtr> homs;
  std::vector<BilevelMap> comps(static_cast<std::size_t>(n * n * n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) homs.push_back(P.leq(x, y) ? point : empty);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (P.leq(x, y) && P.leq(y, z)) {
          comps[static_cast<std::size_t>((x * n + y) * n + z)] =
              BilevelMap(point, point, point, [](const SimplexRef& g, const SimplexRef&) { return g; });
        }
  std::vector<std::string> names(P.names().begin(), P.names().end());
  return SCat(names, homs, std::vector<CellId>(static_cast<std::size_t>(n), 0), comps);
}

std::vector<std::size_t> simplex_counts(const FinSSet& X) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= X.truncation(); ++k) out.push_back(enumerate_simplices(X, k).size());
  return out;
}

}  // namespace

TEST_CASE("rigidification mapping posets") {
  const Rigidification& R = rigidification(5);
  for (int i = 0; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) CHECK(R.mapping(i, j).sset()->cells(0).size() == (1u << (j - i - 1)));
  const auto& P02 = rigidification(2).mapping(0, 2).sset();
  CHECK(P02->cells(0).size() == 2);
  CHECK(P02->cells(1).size() == 1);
  const auto& P03 = rigidification(3).mapping(0, 3).sset();
  CHECK(P03->cells(0).size() == 4);
  CHECK(P03->cells(2).size() == 2);
  for (int k = 0; k <= 4; ++k) CHECK(validate(rigidify(k), 3).ok());
  CHECK_THROWS_AS(rigidification(kMaxRigidify + 1), IndexError);
}

TEST_CASE("rigidified monotone maps are functors and compose") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& f : all_monotone_maps(a, b)) {
        const SimplicialFunctor F = rigidify_map(f);
        CHECK(validate_functor(F, rigidify(b)).ok());
        for (int c = 0; c <= 2; ++c)
          for (const auto& g : all_monotone_maps(c, a)) CHECK(precompose(F, rigidify(b), g) == rigidify_map(compose(f, g)));
      }
  CHECK(rigidify_map(MonotoneMap::identity(3)) == identity_functor(3));
}

TEST_CASE("nerve of a poset category is the poset nerve") {
  std::mt19937_64 rng(17);
  std::bernoulli_distribution edge(0.4);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + trial % 4;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> leq;
    for (int a = 0; a < n; ++a) names.push_back("x" + std::to_string(a));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (edge(rng)) leq.emplace_back(a, b);
    const FinPoset P(names, leq);
    const SCat D = poset_scat(P, 3);
    REQUIRE(validate(D, 3).ok());
    const NerveModel N = simplicial_nerve(D, 3);
    const SSetPtr classical = PosetNerve(P, 3).sset();
    CHECK(N.sset->cell_counts() == classical->cell_counts());
    CHECK(iso_search(N.sset, classical, 3).has_value());
  }
}

TEST_CASE("discrete monoid {1, a}: nerve matches the classical nerve") {
  GradeMonoid G{{"1", "a"}, 0, {{0, 1}, {1, 1}}};
  const GradedSimplicialMonoid M(discrete_monoid_spec(G, 3));
  const NerveModel N = simplicial_nerve(deloop(M), 3);
  CHECK(simplex_counts(*N.sset) == std::vector<std::size_t>{1, 2, 4, 8});
  auto classical = std::make_shared<const FinSSet>(classical_monoid_nerve(G, 3));
  CHECK(simplex_counts(*classical) == std::vector<std::size_t>{1, 2, 4, 8});
  CHECK(iso_search(N.sset, classical, 3).has_value());
}

TEST_CASE("discrete saturating monoids: nerve matches the classical nerve") {
  for (int top = 1; top <= 3; ++top) {
    const GradeMonoid G = saturating_addition(top);
    const GradedSimplicialMonoid M(discrete_monoid_spec(G, 3));
    const NerveModel N = simplicial_nerve(deloop(M), 3);
    auto classical = std::make_shared<const FinSSet>(classical_monoid_nerve(G, 3));
    CHECK(validate(*classical).ok());
    CHECK(N.sset->cell_counts() == classical->cell_counts());
    CHECK(iso_search(N.sset, classical, 3).has_value());
  }
}

TEST_CASE("enumerated functors are valid and match nerve simplices") {
  const GradedSimplicialMonoid M(default_monoid_spec());
  const SCat D = deloop(M);
  const NerveModel N = simplicial_nerve(D, 3);
  for (int k = 0; k <= 3; ++k) {
    const auto Fs = enumerate_functors(k, D);
    CHECK(Fs.size() == enumerate_simplices(*N.sset, k).size());
    for (const auto& F : Fs) {
      CHECK(validate_functor(F, D).ok());
      const SimplexRef s = nerve_simplex_of(N, D, F);
      CHECK(functor_of(N, D, s) == F);
      for (int i = 0; i <= k && k >= 1; ++i)
        CHECK(nerve_simplex_of(N, D, precompose(F, D, face_generator(k, i))) == face(*N.sset, s, i));
    }
  }
}

TEST_CASE("low-simplex classification is a bijection") {
  const GradedSimplicialMonoid M(default_monoid_spec());
  const SCat D = deloop(M);
  for (int k = 1; k <= 3; ++k) {
    const ClassificationCheck c = verify_classification(k, D);
    CAPTURE(k);
    CHECK(c.bijective);
    CHECK(c.decomposition_holds);
    CHECK(c.functor_count == c.tuple_count);
    CHECK(c.problems.empty());
  }
  const auto twos = classify_low_simplices(2, D);
  for (const auto& t : twos) {
    CHECK(t.parts.size() == 4);
    CHECK(t.parts.contains("g012"));
  }
}

TEST_CASE("category validation catches broken structure") {
  // Three vertices {1, a, b} with a non-associative product.
  FinSSetBuilder b(0);
  for (const char* v : {"1", "a", "b"}) b.add_vertex(v);
  auto H = std::make_shared<const FinSSet>(std::move(b).build());
  const int table[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 2, 1}};
  BilevelMap comp(H, H, H, [table](const SimplexRef& g, const SimplexRef& f) {
    return SimplexRef{MonotoneMap(), table[g.cell][f.cell]};
  });
  const SCat D({"*"}, {H}, {0}, {comp});
  const auto r = validate(D, 0);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front().find("associative") != std::string::npos);
  CHECK_THROWS_AS(SCat({"*"}, {H}, {7}, {comp}), ValidationError);
  CHECK_THROWS_AS(SCat({"*", "+"}, {H}, {0}, {comp}), ValidationError);
}

TEST_CASE("functor enumeration refuses shallow homs") {
  const GradedSimplicialMonoid M(MonoidSpec{saturating_addition(2), {1, 2, 2}, 1});
  const SCat D = deloop(M);
  CHECK_NOTHROW(enumerate_functors(2, D));
  CHECK_THROWS_AS(enumerate_functors(3, D), TruncationError);
}
