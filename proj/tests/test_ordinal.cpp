#include <doctest.h>

#include <random>
#include <set>

#include "generators.hpp"
#include "qckit/ordinal.hpp"

using namespace qckit;
using qckit::testing::binomial;

namespace {

// Pointwise definitions, independent of the library's generators.
int coface(int i, int t) { return t < i ? t : t + 1; }
int codegeneracy(int i, int t) { return t <= i ? t : t - 1; }

}  // namespace

TEST_CASE("monotone maps validate their values") {
  CHECK_THROWS_AS(MonotoneMap(2, {0, 2, 1}), IndexError);
  CHECK_THROWS_AS(MonotoneMap(1, {0, 2}), IndexError);
  CHECK_THROWS_AS(MonotoneMap(1, std::span<const int>()), IndexError);
  const MonotoneMap f(3, {0, 0, 2});
  CHECK(f.source_arity() == 2);
  CHECK(f.target_arity() == 3);
  CHECK(f(2) == 2);
  CHECK(f.image() == std::vector<int>{0, 2});
  CHECK_FALSE(f.is_injective());
  CHECK_FALSE(f.is_surjective());
  CHECK(MonotoneMap::identity(4).is_identity());
  CHECK(MonotoneMap() == MonotoneMap::identity(0));
}

TEST_CASE("enumeration counts match binomial coefficients") {
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const auto all = all_monotone_maps(m, n);
      CHECK(all.size() == binomial(m + n + 1, m + 1));
      CHECK(std::set(all.begin(), all.end()).size() == all.size());
      CHECK(std::is_sorted(all.begin(), all.end(), [](const MonotoneMap& a, const MonotoneMap& b) { return a.values() < b.values(); }));
      CHECK(all_surjections(m, n).size() == binomial(m, n));
      CHECK(all_injections(m, n).size() == binomial(n + 1, m + 1));
      for (const auto& f : all_surjections(m, n)) CHECK(f.is_surjective());
      for (const auto& f : all_injections(m, n)) CHECK(f.is_injective());
    }
  }
}

TEST_CASE("generators agree with the pointwise formulas") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i <= n; ++i) {
      const auto d = face_generator(n, i);
      REQUIRE(d.source_arity() == n - 1);
      for (int t = 0; t < n; ++t) CHECK(d(t) == coface(i, t));
    }
    for (int i = 0; i < n; ++i) {
      const auto s = degeneracy_generator(n - 1, i);
      REQUIRE(s.source_arity() == n);
      for (int t = 0; t <= n; ++t) CHECK(s(t) == codegeneracy(i, t));
    }
  }
}

TEST_CASE("cosimplicial identities") {
  for (int n = 1; n <= 5; ++n) {
    for (int j = 0; j <= n + 1; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(compose(face_generator(n + 1, j), face_generator(n, i)) ==
              compose(face_generator(n + 1, i), face_generator(n, j - 1)));
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        CHECK(compose(degeneracy_generator(n, j), degeneracy_generator(n + 1, i)) ==
              compose(degeneracy_generator(n, i), degeneracy_generator(n + 1, j + 1)));
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= n + 1; ++i) {
        const auto lhs = compose(degeneracy_generator(n, j), face_generator(n + 1, i));
        if (i == j || i == j + 1) {
          CHECK(lhs.is_identity());
        } else if (i < j) {
          CHECK(lhs == compose(face_generator(n, i), degeneracy_generator(n - 1, j - 1)));
        } else {
          CHECK(lhs == compose(face_generator(n, i - 1), degeneracy_generator(n - 1, j)));
        }
      }
    }
  }
}

TEST_CASE("composition is associative and unital, exhaustively on small ordinals") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d)
          for (const auto& f : all_monotone_maps(a, b))
            for (const auto& g : all_monotone_maps(b, c)) {
              CHECK(compose(MonotoneMap::identity(c), g) == g);
              CHECK(compose(g, MonotoneMap::identity(b)) == g);
              for (const auto& h : all_monotone_maps(c, d)) CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
            }
  CHECK_THROWS_AS(compose(MonotoneMap::identity(2), MonotoneMap::identity(1)), CompositionError);
}

TEST_CASE("epi-mono factorization is unique and recomposes") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (const auto& f : all_monotone_maps(m, n)) {
        const auto [e, mono] = epi_mono_factor(f);
        CHECK(e.is_surjective());
        CHECK(mono.is_injective());
        CHECK(compose(mono, e) == f);
        CHECK(mono.image() == f.image());
      }
}

TEST_CASE("generator words recompose to the original map") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (const auto& f : all_monotone_maps(m, n)) {
        const auto word = generator_word(f);
        CHECK(compose_word(word, m) == f);
        if (f.is_identity()) CHECK(word.empty());
        // Degeneracies are applied first, then faces.
        bool seen_face = false;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          if (it->kind == Generator::Kind::face) seen_face = true;
          else CHECK_FALSE(seen_face);
        }
      }
}

TEST_CASE("least sections split surjections") {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= m; ++n)
      for (const auto& e : all_surjections(m, n)) {
        const auto s = least_section(e);
        CHECK(compose(e, s).is_identity());
        for (int t = 0; t <= n; ++t)
          for (int u = 0; u < s(t); ++u) CHECK(e(u) != t);
      }
}

TEST_CASE("random composites factor consistently") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> d(0, 6);
    const int a = d(rng), b = d(rng), c = d(rng);
    const auto f = qckit::testing::random_monotone(rng, a, b);
    const auto g = qckit::testing::random_monotone(rng, b, c);
    const auto gf = compose(g, f);
    for (int t = 0; t <= a; ++t) CHECK(gf(t) == g(f(t)));
    CHECK(std::hash<MonotoneMap>{}(gf) == std::hash<MonotoneMap>{}(compose(g, f)));
  }
}
