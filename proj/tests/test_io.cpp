#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "generators.hpp"
#include "qckit/io.hpp"
#include "qckit/join.hpp"
#include "qckit/proposition.hpp"

using namespace qckit;
using qckit::testing::data;
using qckit::testing::random_sset;

TEST_CASE("simplicial sets round-trip bit-exactly") {
  std::mt19937_64 rng(31);
  std::vector<FinSSet> samples{standard_simplex(3), boundary(2), horn(3, 1), empty_sset(2), cyclic_group_nerve(3, 2)};
  for (int t = 0; t < 30; ++t) samples.push_back(random_sset(rng, 3));
  for (const auto& X : samples) {
    const Json j = to_json(X);
    const FinSSet Y = sset_from_json(j);
    CHECK(Y == X);
    CHECK(dump(to_json(Y)) == dump(j));
    CHECK(dump(Json::parse(dump(j))) == dump(j));
    for (int k = 0; k <= X.truncation(); ++k)
      for (const auto& s : enumerate_simplices(X, k)) CHECK(simplex_from_json(X, to_json(X, s)) == s);
  }
}

TEST_CASE("fixture files parse and are what they claim") {
  const FinSSet D3 = sset_from_json(read_json_file(data("delta3.json")));
  CHECK(D3 == standard_simplex(3));
  CHECK(sset_from_json(read_json_file(data("delta2.json"))) == standard_simplex(2));
  CHECK(sset_from_json(read_json_file(data("point.json"))).cell_counts() == std::vector<std::size_t>{1, 0, 0});
  CHECK(sset_from_json(read_json_file(data("empty.json"))).empty());
  CHECK(sset_from_json(read_json_file(data("horn21.json"))) == horn(2, 1));
  CHECK_FALSE(validate(sset_from_json(read_json_file(data("delta3_mutated.json")))).ok());
  CHECK(detect_kind(read_json_file(data("delta3.json"))) == FileKind::sset);
  CHECK(detect_kind(read_json_file(data("default_monoid.json"))) == FileKind::monoid_spec);
  CHECK(detect_kind(read_json_file(data("poset_v.json"))) == FileKind::poset);
  CHECK(detect_kind(Json::object()) == FileKind::unknown);
  CHECK(kind_name(FileKind::scat) == "simplicial category");
}

TEST_CASE("malformed input is located") {
  try {
    read_json_file(data("malformed.json"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("malformed.json:") != std::string::npos);
    CHECK(what.find("malformed JSON") != std::string::npos);
  }
  CHECK_THROWS_AS(read_json_file(data("does_not_exist.json")), ParseError);
  CHECK_THROWS_AS(sset_from_json(Json::parse(R"({"truncation": 1, "cells": {"0": ["a"], "1": ["e"]}})")), ParseError);
  CHECK_THROWS_AS(sset_from_json(Json::parse(R"({"truncation": "x", "cells": {}})")), ParseError);
  CHECK_THROWS_AS(
      sset_from_json(Json::parse(R"({"truncation": 1, "cells": {"0": ["a"], "1": ["e"]}, "faces": {"e": [{"cell": "b", "epi": [0]}, {"cell": "a", "epi": [0]}]}})")),
      ValidationError);
}

TEST_CASE("posets and monoid specs") {
  const FinPoset P = poset_from_json(read_json_file(data("poset_v.json")));
  CHECK(P.size() == 3);
  CHECK(P.leq(0, 2));
  CHECK_FALSE(P.leq(1, 2));
  const FinPoset Q = poset_from_json(to_json(P));
  CHECK(dump(to_json(Q)) == dump(to_json(P)));

  const MonoidSpec d = monoid_spec_from_json(read_json_file(data("default_monoid.json")));
  const MonoidSpec ref = default_monoid_spec();
  CHECK(d.grades.elements == ref.grades.elements);
  CHECK(d.grades.table == ref.grades.table);
  CHECK(d.components == ref.components);
  CHECK(d.truncation == ref.truncation);
  const MonoidSpec back = monoid_spec_from_json(to_json(d));
  CHECK(back.components == d.components);
  CHECK(dump(to_json(back)) == dump(to_json(d)));
  // Missing components are trivial.
  const MonoidSpec sparse = monoid_spec_from_json(Json::parse(
      R"({"grades": {"elements": ["0", "1"], "unit": "0", "table": [["0", "1"], ["1", "1"]]}, "components": {}, "truncation": 2})"));
  CHECK(sparse.components == std::vector<int>{1, 1});
  CHECK_THROWS(monoid_spec_from_json(Json::parse(
      R"({"grades": {"elements": ["0"], "unit": "0", "table": [["0"]]}, "components": {"0": {"group": "S3"}}, "truncation": 2})")));
}

TEST_CASE("simplicial categories round-trip through their tables") {
  const GradedSimplicialMonoid M(default_monoid_spec());
  const SCat D = deloop(M);
  const Json j = to_json(D, 2);
  const SCat E = scat_from_json(j);
  CHECK(validate(E, 2).ok());
  CHECK(dump(to_json(E, 2)) == dump(j));
  CHECK(simplicial_nerve(E, 2).sset->cell_counts() == simplicial_nerve(D, 2).sset->cell_counts());
  // Level-0 tables carry the nerve to dimension 2 and no further.
  const SCat E0 = scat_from_json(to_json(D, 0));
  CHECK(simplicial_nerve(E0, 2).sset->cell_counts() == simplicial_nerve(D, 2).sset->cell_counts());
  CHECK_THROWS_AS(simplicial_nerve(E0, 3), TruncationError);
  Json broken = j;
  broken["comp"].erase(0);
  CHECK_THROWS_AS(scat_from_json(broken), ValidationError);
}

TEST_CASE("maps and slice requests") {
  auto D2 = std::make_shared<const FinSSet>(standard_simplex(2));
  const SimplicialMap id = SimplicialMap::identity(D2);
  CHECK(map_from_json(to_json(id), D2) == id);
  const Json req = Json::parse(R"({"base": "delta3.json", "anchor": {"vertex": "0"}, "side": "under", "dim": 1})");
  const SliceRequest r = slice_request_from_json(req, QCKIT_TEST_DATA);
  CHECK(r.dim == 1);
  CHECK(r.presentation.side == SliceSide::under);
  CHECK(*r.presentation.base == standard_simplex(3));
  CHECK(detect_kind(req) == FileKind::slice);
  const Slice S = slice(r.presentation, r.dim);
  CHECK(S.sset()->cells(0).size() == 4);
  CHECK_THROWS_AS(slice_request_from_json(Json::parse(R"({"base": "delta3.json", "anchor": {"vertex": "9"}})"), QCKIT_TEST_DATA),
                  ValidationError);
}

TEST_CASE("reports serialize") {
  const GradedSimplicialMonoid M(default_monoid_spec());
  const Json r = to_json(verify_proposition(M, 2));
  CHECK(r.at("passed").get<bool>());
  CHECK(r.at("checks").size() == 6);
  const auto w = find_nonassociativity_witness(Pairing::cantor, 32, 4);
  REQUIRE(w.has_value());
  const Json wj = to_json(Pairing::cantor, *w);
  CHECK(wj.at("pairing") == "cantor");
  CHECK(to_json(cyclic_group(3)).at("order") == 3);
  const auto tmp = std::filesystem::temp_directory_path() / "qckit_io_test.json";
  write_json_file(tmp, r);
  CHECK(read_json_file(tmp) == r);
  std::filesystem::remove(tmp);
}
