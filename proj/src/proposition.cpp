#include "qckit/proposition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qckit/join.hpp"
#include "qckit/quasicat.hpp"

namespace qckit {

bool PropositionReport::passed() const {
  return std::ranges::all_of(checks, [](const PropositionCheck& c) { return c.report_only || c.pass; });
}

PropositionReport verify_proposition(const GradedSimplicialMonoid& M, int dims) {
  if (dims < 2) throw IndexError("the pipeline needs dimension at least 2 to test edges for invertibility");
  if (M.truncation() < dims) {
    throw TruncationError("monoid truncated at " + std::to_string(M.truncation()) + " cannot carry the nerve to dimension " +
                          std::to_string(dims + 1));
  }
  const FinSSet& T = *M.total();
  const SCat D = deloop(M);
  const NerveModel N = simplicial_nerve(D, dims + 1);
  const Coslice S = coslice_one_object_fastpath(N.sset, dims);
  const CoreResult K = core(S.sset, dims);
  const FinSSet& X = *S.sset;
  const FinSSet& Core = *K.core;
  const HornSolver solver(X, std::min(2, dims));

  PropositionReport R;
  R.dims = dims;
  R.nerve_counts = N.sset->cell_counts();
  R.coslice_counts = X.cell_counts();
  R.core_counts = Core.cell_counts();
  R.nerve_quasicategory = is_quasicategory_up_to(*N.sset, dims + 1).ok;
  R.core_kan = is_kan_up_to(Core, dims).ok;

  auto anatomy = [&](const SimplexRef& e) { return slice_edge_anatomy(S, N, D, e); };
  auto show = [&](const EdgeAnatomy& a) {
    return "V01=" + describe(T, a.V01) + " V12=" + describe(T, a.V12) + " V02=" + describe(T, a.V02) +
           " gamma=" + describe(T, a.gamma);
  };
  // Vertex of M over a coslice vertex.
  auto vertex_over = [&](CellId x) { return read_low_simplex(functor_of(N, D, S.underlying[static_cast<std::size_t>(x)]), D).parts.at("V01").cell; };
  const SimplexRef unit{MonotoneMap(), M.unit()};

  // (a)
  PropositionCheck a{"a", "core vertices correspond to vertices of M", true, false, {}, {}};
  std::map<CellId, CellId> core_to_m;  // core vertex (as ambient cell) -> M vertex
  {
    std::set<CellId> hit;
    for (CellId cv : Core.cells(0)) {
      const CellId x = K.inclusion[cv].cell;
      const CellId v = vertex_over(x);
      core_to_m[x] = v;
      if (!hit.insert(v).second) a.counterexamples.push_back("two core vertices over " + T.name(v));
    }
    for (CellId v : T.cells(0))
      if (!hit.contains(v)) a.counterexamples.push_back("no core vertex over " + T.name(v));
    a.notes.push_back(std::to_string(Core.cells(0).size()) + " core vertices, " + std::to_string(T.cells(0).size()) +
                      " vertices of M");
  }
  a.pass = a.counterexamples.empty();

  // (b)
  PropositionCheck b{"b", "identity edges have unit V12 and constant path", true, false, {}, {}};
  for (CellId x : X.cells(0)) {
    const SimplexRef id{MonotoneMap::constant(1, 0, 0), x};
    const EdgeAnatomy e = anatomy(id);
    const bool ok = e.V12 == unit && !e.gamma.is_nondegenerate() && e.V01 == e.V02 &&
                    e.gamma == degeneracy(T, e.V01, 0);
    if (!ok) b.counterexamples.push_back("identity of " + X.name(x) + ": " + show(e));
  }
  b.pass = b.counterexamples.empty();

  // (c) and (d)
  PropositionCheck c{"c", "an edge is invertible iff its V12 has the unit grade", true, false, {}, {}};
  PropositionCheck d{"d", "invertible edges V01 -> V02 correspond to edges V02 -> V01 of M", true, false, {}, {}};
  std::set<SimplexRef> gammas;
  std::size_t invertible_count = 0;
  for (const auto& e : enumerate_simplices(X, 1)) {
    const EdgeAnatomy an = anatomy(e);
    const bool inv = is_invertible_edge(solver, e).has_value();
    const bool unit_grade = M.grade_of(an.V12) == M.grades().unit;
    if (inv != unit_grade) {
      c.counterexamples.push_back(describe(X, e) + (inv ? " is invertible but " : " is not invertible but ") + show(an));
    }
    if (!inv) continue;
    ++invertible_count;
    if (edge_source(T, an.gamma) != an.V02 || edge_target(T, an.gamma) != an.V01) {
      d.counterexamples.push_back(describe(X, e) + ": gamma does not run V02 -> V01: " + show(an));
    }
    if (!gammas.insert(an.gamma).second) d.counterexamples.push_back(describe(X, e) + ": gamma already used: " + show(an));
  }
  const auto m_edges = enumerate_simplices(T, 1);
  for (const auto& g : m_edges)
    if (!gammas.contains(g)) d.counterexamples.push_back("edge " + describe(T, g) + " of M has no invertible coslice edge");
  c.pass = c.counterexamples.empty();
  d.pass = d.counterexamples.empty();
  d.notes.push_back(std::to_string(invertible_count) + " invertible 1-simplices, " + std::to_string(m_edges.size()) +
                    " 1-simplices of M; orientation reversed");

  // (e)
  PropositionCheck e{"e", "pi0 and pi1 of the core agree with M", true, false, {}, {}};
  {
    const auto comps_core = pi0(Core);
    const auto comps_m = pi0(T);
    R.pi0_core = comps_core.size();
    R.pi0_monoid = comps_m.size();
    if (comps_core.size() != comps_m.size()) {
      e.counterexamples.push_back("pi0 sizes differ: " + std::to_string(comps_core.size()) + " vs " + std::to_string(comps_m.size()));
    }
    std::map<CellId, std::size_t> m_comp;
    for (std::size_t t = 0; t < comps_m.size(); ++t)
      for (CellId v : comps_m[t]) m_comp[v] = t;
    std::set<std::size_t> images;
    for (const auto& comp : comps_core) {
      std::set<std::size_t> img;
      for (CellId cv : comp) img.insert(m_comp.at(core_to_m.at(K.inclusion[cv].cell)));
      if (img.size() != 1) e.counterexamples.push_back("a core component meets several components of M");
      images.insert(img.begin(), img.end());
    }
    if (images.size() != comps_m.size()) e.counterexamples.push_back("pi0 comparison is not a bijection");

    if (dims >= 2) {
      for (CellId cv : Core.cells(0)) {
        const CellId v = core_to_m.at(K.inclusion[cv].cell);
        try {
          const auto g = pi1(Core, cv);
          const auto h = pi1(T, v);
          R.pi1_orders.emplace_back(Core.name(cv), g.group.order());
          if (!validate(g.group).ok()) e.counterexamples.push_back("pi1 at " + Core.name(cv) + " fails the group laws");
          if (!group_isomorphism(g.group, h.group)) {
            e.counterexamples.push_back("pi1 at " + Core.name(cv) + " has order " + std::to_string(g.group.order()) +
                                        ", not isomorphic to pi1 of M at " + T.name(v) + " (order " +
                                        std::to_string(h.group.order()) + ")");
          }
        } catch (const Error& err) {
          e.counterexamples.push_back(std::string("pi1 at ") + Core.name(cv) + ": " + err.what());
        }
      }
    } else {
      e.notes.push_back("pi1 skipped below dimension 2");
    }
  }
  e.pass = e.counterexamples.empty();

  // (f)
  PropositionCheck f{"f", "isomorphism search between the core and M", true, true, {}, {}};
  {
    const auto iso = iso_search(K.core, M.total(), dims);
    f.notes.push_back(iso ? "isomorphism found up to dimension " + std::to_string(dims)
                          : "no isomorphism up to dimension " + std::to_string(dims) + "; core counts differ from M");
    f.pass = iso.has_value();
  }

  std::map<int, std::vector<std::string>> by_order;
  for (int g = 0; g < M.grades().size(); ++g)
    if (g != M.grades().unit) by_order[M.group_order(g)].push_back(M.grades().elements[static_cast<std::size_t>(g)]);
  for (auto& [order, names] : by_order)
    if (names.size() > 1) R.isomorphic_components.push_back(names);

  R.checks = {a, b, c, d, e, f};
  return R;
}

}  // namespace qckit
