#include <doctest.h>

#include <bit>
#include <random>

#include "generators.hpp"
#include "qckit/poset.hpp"

using namespace qckit;

namespace {

FinPoset random_poset(std::mt19937_64& rng, int n) {
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back("p" + std::to_string(a));
  std::bernoulli_distribution edge(0.35);
  std::vector<std::pair<int, int>> leq;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (edge(rng)) leq.emplace_back(a, b);
  return FinPoset(names, leq);
}

// Strict chains with k+1 elements, by brute force over subsets.
std::size_t chain_count(const FinPoset& P, int k) {
  std::size_t count = 0;
  const int n = P.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k + 1) continue;
    bool chain = true;
    for (int a = 0; a < n && chain; ++a)
      for (int b = a + 1; b < n && chain; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !P.leq(a, b) && !P.leq(b, a)) chain = false;
    if (chain) ++count;
  }
  return count;
}

// Subsets of [k] inside [i, j] containing i and j.
std::vector<Subset> interval_subsets(int i, int j, int k) {
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << (k + 1)); ++s) {
    if (!(s >> i & 1) || !(s >> j & 1)) continue;
    bool inside = true;
    for (int t = 0; t <= k; ++t)
      if ((s >> t & 1) && (t < i || t > j)) inside = false;
    if (inside) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("posets take the reflexive-transitive closure") {
  const FinPoset P({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(P.leq(0, 2));
  CHECK(P.leq(1, 1));
  CHECK_FALSE(P.leq(2, 0));
  CHECK(P.longest_chain() == 3);
  CHECK(P.strict_pairs().size() == 3);
  CHECK_THROWS_AS(FinPoset({"a", "b"}, {{0, 1}, {1, 0}}), ValidationError);
}

TEST_CASE("poset nerves count strict chains") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const FinPoset P = random_poset(rng, 1 + trial % 7);
    const PosetNerve N(P);
    REQUIRE(validate(*N.sset()).ok());
    for (int k = 0; k <= N.sset()->truncation(); ++k) CHECK(N.sset()->cells(k).size() == chain_count(P, k));
    for (int k = N.sset()->truncation() + 1; k <= P.size(); ++k) CHECK(chain_count(P, k) == 0);
  }
}

TEST_CASE("poset nerve simplices are weak chains") {
  const FinPoset P({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {0, 3}});
  const PosetNerve N(P, 3);
  for (int k = 0; k <= 3; ++k) {
    for (const auto& s : enumerate_simplices(*N.sset(), k)) {
      const auto chain = N.elements_of(s);
      REQUIRE(chain.size() == static_cast<std::size_t>(k + 1));
      for (std::size_t t = 1; t < chain.size(); ++t) CHECK(P.leq(chain[t - 1], chain[t]));
      CHECK(N.simplex_of(chain) == s);
      for (int i = 0; i <= k && k >= 1; ++i) {
        auto dropped = chain;
        dropped.erase(dropped.begin() + i);
        CHECK(N.elements_of(face(*N.sset(), s, i)) == dropped);
      }
    }
  }
  // a <= b <= c, a <= d: weak chains of length 3 number 1+... counted directly.
  std::size_t weak = 0;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z)
        if (P.leq(x, y) && P.leq(y, z)) ++weak;
  CHECK(enumerate_simplices(*N.sset(), 2).size() == weak);
}

TEST_CASE("mapping posets are the interval subsets") {
  for (int k = 0; k <= 6; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = i; j <= k; ++j) {
        const MappingPoset P = mapping_poset(i, j, k);
        auto expected = interval_subsets(i, j, k);
        auto got = P.elements;
        CHECK(got.size() == (i == j ? 1u : (1u << (j - i - 1))));
        std::ranges::sort(expected);
        std::ranges::sort(got);
        CHECK(got == expected);
        CHECK(P.elements.front() == ((Subset{1} << i) | (Subset{1} << j)));
        for (Subset s : P.elements) CHECK(P.elements[static_cast<std::size_t>(P.index_of(s))] == s);
      }
}

TEST_CASE("low mapping nerves") {
  const MappingNerve P02(0, 2, 2);
  CHECK(P02.sset()->cell_counts() == std::vector<std::size_t>{2, 1});
  const MappingNerve P03(0, 3, 3);
  CHECK(P03.sset()->cells(0).size() == 4);
  CHECK(P03.sset()->cells(2).size() == 2);
  CHECK(subset_name(0b1011) == "013");
}

TEST_CASE("union composition is a simplicial map") {
  for (int k = 0; k <= 4; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = i; j <= k; ++j)
        for (int p = j; p <= k; ++p) {
          const BilevelMap u = union_compose(i, j, p, k);
          CHECK(validate_bilevel(u, 2).ok());
          const MappingNerve ij(i, j, k), jp(j, p, k), ip(i, p, k);
          for (Subset a : jp.mapping_poset().elements)
            for (Subset b : ij.mapping_poset().elements) {
              const std::vector<Subset> va{a}, vb{b};
              CHECK(ip.subsets_of(u(jp.simplex_of(va), ij.simplex_of(vb))) == std::vector<Subset>{a | b});
            }
        }
}

TEST_CASE("poset maps induced by monotone maps") {
  for (int l = 0; l <= 3; ++l)
    for (int k = 0; k <= 3; ++k)
      for (const auto& f : all_monotone_maps(l, k))
        for (int i = 0; i <= l; ++i)
          for (int j = i; j <= l; ++j) {
            const PosetImage im = poset_map_image(f, i, j);
            CHECK(validate_map(im.nerve_map).ok());
            const MappingPoset src = mapping_poset(i, j, l);
            const MappingPoset dst = mapping_poset(f(i), f(j), k);
            for (std::size_t t = 0; t < src.elements.size(); ++t) {
              Subset img = 0;
              for (int v = 0; v <= l; ++v)
                if (src.elements[t] >> v & 1) img |= Subset{1} << f(v);
              CHECK(dst.elements[static_cast<std::size_t>(im.element_map[t])] == img);
              CHECK(image_subset(f, src.elements[t]) == img);
            }
          }
}
