// The coslice-core pipeline on a graded simplicial monoid M: build
// N(BM), take the coslice under its vertex, take the core, and compare the
// result with M.
#pragma once

#include <string>
#include <vector>

#include "qckit/monoid.hpp"

namespace qckit {

struct PropositionCheck {
  std::string id;  // "a" .. "f"
  std::string title;
  bool pass{true};
  /// Report-only checks do not count towards the verdict.
  bool report_only{false};
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;
};

struct PropositionReport {
  int dims{0};
  std::vector<std::size_t> nerve_counts, coslice_counts, core_counts;
  std::size_t pi0_core{0}, pi0_monoid{0};
  /// pi1 orders at each core vertex, by vertex name.
  std::vector<std::pair<std::string, int>> pi1_orders;
  bool core_kan{false};
  bool nerve_quasicategory{false};
  /// Grades whose components are isomorphic yet distinct.
  std::vector<std::vector<std::string>> isomorphic_components;
  std::vector<PropositionCheck> checks;

  /// Checks (a) to (e) all pass.
  bool passed() const;
};

/// Runs the pipeline with the coslice up to `dims` (the nerve to dims + 1).
PropositionReport verify_proposition(const GradedSimplicialMonoid& M, int dims = 2);

}  // namespace qckit
