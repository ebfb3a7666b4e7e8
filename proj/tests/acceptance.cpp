// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "../tools/commands.hpp"
#include "generators.hpp"
#include "qckit/enriched.hpp"
#include "qckit/grassmann.hpp"
#include "qckit/io.hpp"
#include "qckit/join.hpp"
#include "qckit/monoid.hpp"
#include "qckit/poset.hpp"
#include "qckit/proposition.hpp"
#include "qckit/quasicat.hpp"

using namespace qckit;
using qckit::testing::data;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass{true};
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

SSetPtr ptr(FinSSet X) { return std::make_shared<const FinSSet>(std::move(X)); }

std::vector<std::size_t> all_counts(const FinSSet& X) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= X.truncation(); ++k) out.push_back(enumerate_simplices(X, k).size());
  return out;
}

std::vector<std::string> sset_fixtures() {
  std::vector<std::string> out;
  for (const char* f : {"delta2.json", "delta3.json", "point.json", "horn21.json", "z2_nerve.json", "empty.json"}) out.push_back(data(f));
  return out;
}

Outcome rigidification_fidelity() {
  Outcome o;
  const auto& P02 = rigidification(2).mapping(0, 2).sset();
  o.require(P02->cells(0).size() == 2 && P02->cells(1).size() == 1, "P02 is not {02 < 012}");
  const auto& P03 = rigidification(3).mapping(0, 3).sset();
  o.require(P03->cells(0).size() == 4 && P03->cells(2).size() == 2, "P03 counts");
  const Rigidification& R = rigidification(5);
  for (int i = 0; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      std::size_t oracle = 0;
      for (unsigned s = 0; s < 64u; ++s) {
        bool ok = (s >> i & 1u) && (s >> j & 1u);
        for (int t = 0; t < 6 && ok; ++t)
          if ((s >> t & 1u) && (t < i || t > j)) ok = false;
        if (ok) ++oracle;
      }
      o.require(R.mapping(i, j).sset()->cells(0).size() == oracle && oracle == (1u << (j - i - 1)),
                "|P" + std::to_string(i) + std::to_string(j) + "|");
    }
  return o;
}

Outcome low_simplex_classification() {
  Outcome o;
  const GradedSimplicialMonoid M(default_monoid_spec());
  const SCat D = deloop(M);
  for (int k = 1; k <= 3; ++k) {
    const ClassificationCheck c = verify_classification(k, D);
    o.require(c.bijective && c.decomposition_holds && c.functor_count == c.tuple_count && c.problems.empty(),
              "k=" + std::to_string(k) + (c.problems.empty() ? "" : ": " + c.problems.front()));
    if (k == 3) o.detail = o.pass ? std::to_string(c.functor_count) + " 3-simplices" : o.detail;
  }
  return o;
}

Outcome discrete_enrichment() {
  Outcome o;
  const GradeMonoid G{{"1", "a"}, 0, {{0, 1}, {1, 1}}};
  const GradedSimplicialMonoid M(discrete_monoid_spec(G, 3));
  const NerveModel N = simplicial_nerve(deloop(M), 3);
  auto classical = ptr(qckit::testing::classical_monoid_nerve(G, 3));
  const std::vector<std::size_t> expected{1, 2, 4, 8};
  o.require(all_counts(*N.sset) == expected, "nerve counts");
  o.require(all_counts(*classical) == expected, "classical counts");
  o.require(iso_search(N.sset, classical, 3).has_value(), "no isomorphism");
  return o;
}

Outcome join_canonical_iso() {
  Outcome o;
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      const std::string tag = "k=" + std::to_string(k) + " l=" + std::to_string(l);
      const Join J(ptr(standard_simplex(k)), ptr(standard_simplex(l)));
      auto D = ptr(standard_simplex(k + l + 1));
      const auto iso = iso_search(J.sset(), D, k + l + 1);
      o.require(iso.has_value(), tag + ": no isomorphism");
      if (!iso) continue;
      const auto [i0, i1] = join_inclusions(J);
      for (int v = 0; v <= k; ++v)
        o.require((*iso)(i0({MonotoneMap(), J.left().at(std::to_string(v))})).cell == D->at(std::to_string(v)), tag + ": iota0");
      for (int v = 0; v <= l; ++v)
        o.require((*iso)(i1({MonotoneMap(), J.right().at(std::to_string(v))})).cell == D->at(std::to_string(k + 1 + v)),
                  tag + ": iota1");
    }
  return o;
}

Outcome coslice_anatomy() {
  Outcome o;
  std::vector<SSetPtr> fixtures;
  for (const auto& f : sset_fixtures()) fixtures.push_back(ptr(sset_from_json(read_json_file(f))));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) fixtures.push_back(ptr(qckit::testing::random_sset(rng, 3)));
  const GradedSimplicialMonoid M(default_monoid_spec());
  const SCat D = deloop(M);
  const NerveModel N = simplicial_nerve(D, 3);
  fixtures.push_back(N.sset);
  std::size_t anchors = 0;
  for (const auto& X : fixtures) {
    if (X->truncation() < 2) continue;
    for (CellId x : X->cells(0)) {
      const Slice S = slice(vertex_slice(X, x, SliceSide::under), 1);
      std::size_t edges = 0;
      for (const auto& e : enumerate_simplices(*X, 1))
        if (face(*X, e, 1).cell == x) ++edges;
      o.require(S.sset()->cells(0).size() == edges, "0-cells of x/C at " + X->name(x));
      ++anchors;
    }
  }
  const Coslice fast = coslice_one_object_fastpath(N.sset, 2);
  const Slice generic = slice(vertex_slice(N.sset, 0, SliceSide::under), 2);
  const auto cmp = compare_coslices(generic, fast);
  o.require(cmp.has_value() && is_isomorphism(*cmp), "fastpath differs from the generic slice");
  if (o.pass) o.detail = std::to_string(anchors) + " anchors";
  return o;
}

Outcome proposition_at_desk_scale() {
  Outcome o;
  for (const char* file : {"default_monoid.json", "z3_monoid.json", "four_grade_monoid.json"}) {
    const GradedSimplicialMonoid M(monoid_spec_from_json(read_json_file(data(file))));
    const PropositionReport R = verify_proposition(M, 2);
    for (const auto& c : R.checks)
      if (!c.report_only)
        o.require(c.pass, std::string(file) + " (" + c.id + ")" + (c.counterexamples.empty() ? "" : ": " + c.counterexamples.front()));
    o.require(R.pi0_core == R.pi0_monoid && R.pi0_core == static_cast<std::size_t>(M.grades().size()), std::string(file) + " pi0");
    // pi1 at each core vertex against the group over its grade.
    const FinSSet& T = *M.total();
    std::multiset<int> want, got;
    for (CellId v : T.cells(0)) want.insert(M.group_order(M.grade_of(T.simplex(v))));
    for (const auto& [name, n] : R.pi1_orders) got.insert(n);
    o.require(want == got, std::string(file) + " pi1 orders");
  }
  // The default case by name: trivial, Z/2, Z/2.
  const GradedSimplicialMonoid M(default_monoid_spec());
  const PropositionReport R = verify_proposition(M, 2);
  std::multiset<int> orders;
  for (const auto& [name, n] : R.pi1_orders) orders.insert(n);
  o.require(R.pi0_core == 3 && orders == std::multiset<int>{1, 2, 2}, "default: pi0 3 and pi1 (1, Z/2, Z/2)");
  return o;
}

Outcome quasicategory_verdicts() {
  Outcome o;
  const GradedSimplicialMonoid M(default_monoid_spec());
  const NerveModel N = simplicial_nerve(deloop(M), 3);
  const HornVerdict q = is_quasicategory_up_to(*N.sset, 3);
  o.require(q.ok, "inner horn unfillable in the nerve");
  const Coslice S = coslice_one_object_fastpath(N.sset, 2);
  const CoreResult K = core(S.sset, 2);
  const HornVerdict k = is_kan_up_to(*K.core, 2);
  o.require(k.ok, "core is not Kan up to 2");
  if (o.pass) o.detail = std::to_string(q.horns_checked) + " inner + " + std::to_string(k.horns_checked) + " core horns";
  return o;
}

Outcome monoid_model() {
  Outcome o;
  const AssocCheck a = boxplus_assoc_check(1, 1000);
  o.require(a.trials == 1000 && a.failures == 0 && a.ranks_add, "boxplus failures: " + std::to_string(a.failures));
  int alternatives = 0;
  for (Pairing p : {Pairing::cantor, Pairing::interleave, Pairing::szudzik}) {
    const auto w = find_nonassociativity_witness(p, 32, 4);
    const bool found = w && !(w->left == w->right);
    if (p == Pairing::cantor) o.require(found, "no cantor witness");
    else if (found) ++alternatives;
  }
  o.require(alternatives >= 1, "no witness for an alternative pairing");
  return o;
}

Outcome self_consistency() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "qckit_acceptance";
  fs::create_directories(dir);
  auto run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    return cli::run(args, out, err);
  };
  std::vector<std::pair<std::string, std::vector<std::string>>> jobs;
  for (const char* spec : {"default_monoid.json", "z3_monoid.json", "four_grade_monoid.json", "discrete_monoid.json", "trivial_monoid.json"}) {
    const std::string stem = fs::path(spec).stem().string();
    jobs.push_back({stem + "_nerve", {"nerve", data(spec), "--dim", "3"}});
    jobs.push_back({stem + "_deloop", {"deloop", data(spec)}});
    jobs.push_back({stem + "_vp", {"verify-prop", data(spec)}});
  }
  for (const auto& f : sset_fixtures()) {
    const std::string stem = fs::path(f).stem().string();
    jobs.push_back({stem + "_core", {"core", f}});
    jobs.push_back({stem + "_pi", {"pi", f}});
  }
  jobs.push_back({"d3_coslice", {"coslice", data("delta3.json"), "--at", "0", "--dim", "2"}});
  jobs.push_back({"grassmann", {"grassmann", "--assoc-check"}});
  jobs.push_back({"witness", {"grassmann", "--pairing-witness"}});
  std::size_t artifacts = 0;
  for (auto& [name, args] : jobs) {
    const fs::path rep = dir / (name + "_report.json");
    const fs::path out = dir / (name + ".json");
    args.insert(args.end(), {"--report", rep.string()});
    if (args.front() != "verify-prop" && args.front() != "pi" && args.front() != "grassmann") args.insert(args.end(), {"-o", out.string()});
    const int code = run(args);
    o.require(code == 0, name + " exited " + std::to_string(code));
    for (const fs::path& p : {rep, out}) {
      if (!fs::exists(p)) continue;
      o.require(run({"check", p.string()}) == 0, p.filename().string() + " fails check");
      ++artifacts;
    }
  }

  const FinSSet D = standard_simplex(3);
  for (int k = 0; k <= 3; ++k)
    for (const auto& s : enumerate_simplices(D, k))
      for (int m = 0; m <= 3; ++m)
        for (const auto& alpha : all_monotone_maps(m, k))
          for (int l = 0; l <= 3; ++l)
            for (const auto& beta : all_monotone_maps(l, m))
              o.require(apply_operator(D, s, compose(alpha, beta)) == apply_operator(D, apply_operator(D, s, alpha), beta),
                        "apply_operator functoriality on the 3-simplex");

  std::vector<SSetPtr> fixtures;
  for (const auto& f : sset_fixtures()) fixtures.push_back(ptr(sset_from_json(read_json_file(f))));
  for (const char* spec : {"default_monoid.json", "z3_monoid.json", "discrete_monoid.json"}) {
    const GradedSimplicialMonoid M(monoid_spec_from_json(read_json_file(data(spec))));
    const NerveModel N = simplicial_nerve(deloop(M), 3);
    fixtures.push_back(N.sset);
    fixtures.push_back(coslice_one_object_fastpath(N.sset, 2).sset);
  }
  for (const auto& X : fixtures) {
    const int d = std::min(X->truncation(), 3);
    const CoreResult once = core(X, d);
    const CoreResult twice = core(once.core, d);
    o.require(is_isomorphism(twice.inclusion), "core not idempotent");
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = std::to_string(artifacts) + " artifacts checked";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "rigidification fidelity", 1, rigidification_fidelity},
      {2, "low-simplex classification", 30, low_simplex_classification},
      {3, "discrete-enrichment oracle", 5, discrete_enrichment},
      {4, "join canonical iso", 5, join_canonical_iso},
      {5, "coslice anatomy", 30, coslice_anatomy},
      {6, "proposition at desk scale", 300, proposition_at_desk_scale},
      {7, "quasicategory and Kan verdicts", 120, quasicategory_verdicts},
      {8, "monoid model", 10, monoid_model},
      {9, "self-consistency", 60, self_consistency},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < c.limit_s;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::ostringstream time;
    time << std::fixed << std::setprecision(3) << s << "s / " << c.limit_s << "s";
    std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << time.str() << "]";
    if (!in_time) std::cout << "  over time";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
