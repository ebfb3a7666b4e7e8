#include <doctest.h>

#include <map>
#include <random>
#include <ranges>
#include <set>

#include "generators.hpp"
#include "qckit/io.hpp"
#include "qckit/proposition.hpp"
#include "qckit/quasicat.hpp"

using namespace qckit;

namespace {

MonoidSpec load(const char* file) { return monoid_spec_from_json(read_json_file(qckit::testing::data(file))); }

const PropositionCheck& check(const PropositionReport& R, const std::string& id) {
  for (const auto& c : R.checks)
    if (c.id == id) return c;
  throw Error("no check " + id);
}

// pi1 orders the core should show: the group order over each grade.
std::multiset<int> expected_pi1(const GradedSimplicialMonoid& M) {
  std::multiset<int> out;
  for (int g = 0; g < M.grades().size(); ++g) out.insert(M.group_order(g));
  return out;
}

void expect_pass(const GradedSimplicialMonoid& M, int dims) {
  const PropositionReport R = verify_proposition(M, dims);
  for (const auto& c : R.checks) {
    CAPTURE(c.id);
    CAPTURE(c.title);
    if (!c.report_only) CHECK(c.pass);
    if (!c.report_only && !c.counterexamples.empty()) MESSAGE(c.counterexamples.front());
  }
  CHECK(R.passed());
  CHECK(R.pi0_core == static_cast<std::size_t>(M.grades().size()));
  CHECK(R.pi0_monoid == static_cast<std::size_t>(M.grades().size()));
  std::multiset<int> orders;
  for (const auto& [name, n] : R.pi1_orders) orders.insert(n);
  CHECK(orders == expected_pi1(M));
  CHECK(R.core_kan);
  CHECK(R.nerve_quasicategory);
  CHECK(R.checks.size() == 6);
  CHECK(check(R, "f").report_only);
}

}  // namespace

TEST_CASE("default reference monoid") {
  const GradedSimplicialMonoid M(default_monoid_spec());
  expect_pass(M, 2);
  const PropositionReport R = verify_proposition(M, 2);
  CHECK(R.pi0_core == 3);
  std::map<std::string, int> pi1(R.pi1_orders.begin(), R.pi1_orders.end());
  REQUIRE(pi1.size() == 3);
  // Orders are keyed by core vertex names; the unit grade gives the trivial group.
  CHECK(std::ranges::count(R.pi1_orders | std::views::values, 1) == 1);
  CHECK(std::ranges::count(R.pi1_orders | std::views::values, 2) == 2);
  CHECK(R.isomorphic_components.size() == 1);
  CHECK(R.isomorphic_components.front().size() == 2);
}

TEST_CASE("spec variations") {
  for (const char* file : {"z3_monoid.json", "four_grade_monoid.json", "trivial_monoid.json", "discrete_monoid.json"}) {
    CAPTURE(file);
    const GradedSimplicialMonoid M(load(file));
    expect_pass(M, 2);
  }
}

TEST_CASE("random specs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    const GradedSimplicialMonoid M(qckit::testing::random_monoid_spec(rng));
    expect_pass(M, 2);
  }
}

TEST_CASE("dimension and truncation limits") {
  const GradedSimplicialMonoid M(default_monoid_spec());
  CHECK_THROWS_AS(verify_proposition(M, 1), IndexError);
  expect_pass(M, 3);
  const GradedSimplicialMonoid shallow(MonoidSpec{saturating_addition(2), {1, 2, 2}, 1});
  CHECK_THROWS_AS(verify_proposition(shallow, 2), TruncationError);
}

TEST_CASE("discrete idempotent monoid has no invertible non-identity edges") {
  const GradedSimplicialMonoid M(load("discrete_monoid.json"));
  const PropositionReport R = verify_proposition(M, 2);
  CHECK(R.core_counts.at(0) == 2);
  for (std::size_t k = 1; k < R.core_counts.size(); ++k) CHECK(R.core_counts[k] == 0);
}
