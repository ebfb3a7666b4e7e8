#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#ifndef QCKIT_VERSION
#define QCKIT_VERSION "0.0.0"
#endif

namespace qckit::cli {

namespace fs = std::filesystem;

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

Json header(const CommandConfig& c, int dim_used) {
  return {{"report", c.subcommand},
          {"version", version()},
          {"seed", c.seed},
          {"inputs", c.inputs},
          {"dim_caps", {{"dim", dim_used}, {"max_dim", dim_cap()}, {"hard_limit", kHardDimLimit}}}};
}

const std::string& single_input(const CommandConfig& c) {
  if (c.inputs.size() != 1) throw UsageError(c.subcommand + " takes exactly one input file");
  return c.inputs.front();
}

fs::path dir_of(const std::string& path) { return fs::path(path).parent_path(); }

int require_dim(const CommandConfig& c, int fallback, int offset = 0) {
  const int d = c.dim.value_or(fallback);
  if (d < 0) throw UsageError("--dim must be non-negative");
  const int cap = dim_cap();
  if (d + offset > cap) {
    throw UsageError("--dim " + std::to_string(d) + " needs dimension " + std::to_string(d + offset) +
                     " above the cap " + std::to_string(cap) + " (raise QCKIT_MAX_DIM, at most " +
                     std::to_string(kHardDimLimit) + ")");
  }
  return d;
}

SSetPtr load_sset(const std::string& path) {
  const Json j = read_json_file(path);
  if (detect_kind(j) != FileKind::sset) throw UsageError(path + ": expected a simplicial set, found " + kind_name(detect_kind(j)));
  auto X = std::make_shared<const FinSSet>(sset_from_json(j));
  if (auto r = validate(*X); !r.ok()) throw ValidationError(path + ": " + r.violations.front());
  return X;
}

GradedSimplicialMonoid load_monoid(const std::string& path) {
  const Json j = read_json_file(path);
  if (detect_kind(j) != FileKind::monoid_spec) throw UsageError(path + ": expected a monoid spec, found " + kind_name(detect_kind(j)));
  return GradedSimplicialMonoid(monoid_spec_from_json(j));
}

std::vector<std::size_t> simplex_counts(const FinSSet& X) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= X.truncation(); ++d) out.push_back(enumerate_simplices(X, d).size());
  return out;
}

std::string count_table(const FinSSet& X) {
  std::ostringstream out;
  out << "dim  nondegenerate  all\n";
  const auto counts = X.cell_counts();
  const auto all = simplex_counts(X);
  for (std::size_t d = 0; d < counts.size(); ++d) out << d << "    " << counts[d] << "    " << all[d] << "\n";
  return out.str();
}

CommandResult sset_result(const CommandConfig& c, const FinSSet& X, int dim_used, Json extra) {
  CommandResult r;
  r.artifact = c.format == "dot" ? to_dot(X, std::min(2, X.truncation())) : dump(to_json(X));
  r.summary = count_table(X);
  r.report = header(c, dim_used);
  r.report["cell_counts"] = X.cell_counts();
  r.report["simplex_counts"] = simplex_counts(X);
  r.report.update(extra);
  return r;
}

std::vector<std::string> names(const FinSSet& X, const std::vector<CellId>& cells) {
  std::vector<std::string> out;
  for (CellId v : cells) out.push_back(X.name(v));
  return out;
}

}  // namespace

std::string version() { return QCKIT_VERSION; }

int dim_cap() {
  const char* env = std::getenv("QCKIT_MAX_DIM");
  if (!env || !*env) return kDefaultDimCap;
  int v = 0;
  try {
    std::size_t used = 0;
    v = std::stoi(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw UsageError(std::string("QCKIT_MAX_DIM='") + env + "' is not an integer");
  }
  if (v < 0) throw UsageError("QCKIT_MAX_DIM must be non-negative");
  if (v > kHardDimLimit) {
    throw UsageError("QCKIT_MAX_DIM=" + std::to_string(v) + " refused: nerve enumeration is limited to dimension " +
                     std::to_string(kHardDimLimit));
  }
  return v;
}

CommandResult cmd_check(const CommandConfig& c) {
  const std::string& path = single_input(c);
  const Json j = read_json_file(path);
  const FileKind kind = detect_kind(j);
  ValidationReport v;
  try {
    switch (kind) {
      case FileKind::sset: v = validate(sset_from_json(j)); break;
      case FileKind::poset: poset_from_json(j); break;
      case FileKind::scat: {
        const SCat D = scat_from_json(j, dir_of(path));
        v = validate(D, D.hom_truncation());
        break;
      }
      case FileKind::monoid_spec: {
        const GradedSimplicialMonoid M(monoid_spec_from_json(j));
        v = M.validate_product(M.truncation());
        break;
      }
      case FileKind::slice: {
        const SliceRequest req = slice_request_from_json(j, dir_of(path));
        slice(req.presentation, req.dim);
        break;
      }
      case FileKind::report:
        for (const char* key : {"version", "seed", "dim_caps"})
          if (!j.contains(key)) v.violations.push_back(std::string("report lacks '") + key + "'");
        break;
      case FileKind::unknown: throw ParseError(path + ": not a recognised qckit file");
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    v.violations.push_back(e.what());
  }
  CommandResult r;
  r.exit_code = v.ok() ? kExitOk : kExitFailure;
  r.report = header(c, 0);
  r.report["kind"] = kind_name(kind);
  r.report["valid"] = v.ok();
  r.report["violations"] = v.violations;
  r.summary = path + ": " + kind_name(kind) + (v.ok() ? " valid\n" : " INVALID\n");
  for (const auto& msg : v.violations) r.summary += "  " + msg + "\n";
  return r;
}

CommandResult cmd_nerve(const CommandConfig& c) {
  const int d = require_dim(c, 3);
  const GradedSimplicialMonoid M = load_monoid(single_input(c));
  const NerveModel N = simplicial_nerve(deloop(M), d);
  return sset_result(c, *N.sset, d, {{"monoid_counts", M.total()->cell_counts()}});
}

CommandResult cmd_deloop(const CommandConfig& c) {
  const GradedSimplicialMonoid M = load_monoid(single_input(c));
  const SCat D = deloop(M);
  CommandResult r;
  r.artifact = dump(to_json(D, D.hom_truncation()));
  r.report = header(c, D.hom_truncation());
  r.summary = "one object, hom counts";
  for (auto n : M.total()->cell_counts()) r.summary += " " + std::to_string(n);
  r.summary += "\n";
  return r;
}

CommandResult cmd_coslice(const CommandConfig& c) {
  const std::string& path = single_input(c);
  const Json j = read_json_file(path);
  SliceRequest req{vertex_slice(std::make_shared<const FinSSet>(standard_simplex(0)), 0, SliceSide::under), 1};
  if (detect_kind(j) == FileKind::slice) {
    req = slice_request_from_json(j, dir_of(path));
    if (c.dim) req.dim = *c.dim;
  } else if (detect_kind(j) == FileKind::sset) {
    if (c.at.empty()) throw UsageError("coslice of a simplicial set needs --at <vertex>");
    const SSetPtr C = load_sset(path);
    const auto x = C->find(c.at);
    if (!x) throw UsageError("no cell '" + c.at + "' in " + path);
    req = {vertex_slice(C, *x, SliceSide::under), c.dim.value_or(1)};
  } else {
    throw UsageError(path + ": expected a simplicial set or a slice presentation");
  }
  if (req.dim > dim_cap()) throw UsageError("--dim " + std::to_string(req.dim) + " above the cap " + std::to_string(dim_cap()));
  const Slice S = slice(req.presentation, req.dim);
  return sset_result(c, *S.sset(), req.dim, {{"side", req.presentation.side == SliceSide::under ? "under" : "over"}});
}

CommandResult cmd_core(const CommandConfig& c) {
  const SSetPtr X = load_sset(single_input(c));
  const int d = require_dim(c, std::min(X->truncation(), kDefaultDimCap));
  const CoreResult K = core(X, d);
  return sset_result(c, *K.core, d, {{"invertible_edges", names(*X, K.invertible_edges)}});
}

CommandResult cmd_pi(const CommandConfig& c) {
  const SSetPtr X = load_sset(single_input(c));
  CommandResult r;
  r.report = header(c, 2);
  Json comps = Json::array();
  for (const auto& comp : pi0(*X)) comps.push_back(names(*X, comp));
  r.report["pi0"] = comps;
  r.summary = "pi0: " + std::to_string(comps.size()) + " components\n";
  std::vector<CellId> base;
  if (c.vertex.empty()) {
    base.assign(X->cells(0).begin(), X->cells(0).end());
  } else {
    const auto v = X->find(c.vertex);
    if (!v || X->dim(*v) != 0) throw UsageError("no vertex '" + c.vertex + "'");
    base.push_back(*v);
  }
  Json groups = Json::object();
  for (CellId v : base) {
    try {
      const FundamentalGroup G = pi1(*X, v);
      Json g = to_json(G.group);
      Json reps = Json::array();
      for (const auto& s : G.representatives) reps.push_back(to_json(*X, s));
      g["representatives"] = std::move(reps);
      groups[X->name(v)] = std::move(g);
      r.summary += "pi1 at " + X->name(v) + ": order " + std::to_string(G.group.order()) + "\n";
    } catch (const TruncationError&) {
      throw;
    } catch (const Error& e) {
      groups[X->name(v)] = {{"error", e.what()}};
      r.summary += "pi1 at " + X->name(v) + ": " + e.what() + "\n";
      r.exit_code = kExitFailure;
    }
  }
  r.report["pi1"] = std::move(groups);
  return r;
}

CommandResult cmd_verify_prop(const CommandConfig& c) {
  const int d = require_dim(c, 2, 1);
  const GradedSimplicialMonoid M = load_monoid(single_input(c));
  const PropositionReport R = verify_proposition(M, d);
  CommandResult r;
  r.exit_code = R.passed() ? kExitOk : kExitFailure;
  r.report = header(c, d);
  r.report.update(to_json(R));
  std::ostringstream out;
  for (const auto& ch : R.checks) {
    out << "(" << ch.id << ") " << (ch.pass ? "PASS" : "FAIL") << (ch.report_only ? " [report only] " : " ") << ch.title << "\n";
    for (const auto& n : ch.notes) out << "    " << n << "\n";
    for (const auto& x : ch.counterexamples) out << "    counterexample: " << x << "\n";
  }
  out << (R.passed() ? "verdict: PASS\n" : "verdict: FAIL\n");
  r.summary = out.str();
  return r;
}

CommandResult cmd_grassmann(const CommandConfig& c) {
  if (c.assoc_check == c.pairing_witness) throw UsageError("grassmann needs exactly one of --assoc-check, --pairing-witness");
  CommandResult r;
  r.report = header(c, 0);
  if (c.assoc_check) {
    if (c.trials < 0) throw UsageError("--trials must be non-negative");
    const AssocCheck a = boxplus_assoc_check(c.seed, c.trials);
    r.report["assoc_check"] = to_json(a);
    r.summary = "boxplus: " + std::to_string(a.trials) + " triples, " + std::to_string(a.failures) + " failures" +
                (a.ranks_add ? ", ranks additive\n" : ", ranks NOT additive\n");
    r.exit_code = a.failures == 0 && a.ranks_add ? kExitOk : kExitFailure;
    return r;
  }
  std::vector<Pairing> ps;
  if (c.pairing == "all") {
    ps = {Pairing::cantor, Pairing::interleave, Pairing::szudzik};
  } else {
    for (Pairing p : {Pairing::cantor, Pairing::interleave, Pairing::szudzik})
      if (pairing_name(p) == c.pairing) ps.push_back(p);
    if (ps.empty()) throw UsageError("unknown pairing '" + c.pairing + "'");
  }
  Json ws = Json::array();
  for (Pairing p : ps) {
    const auto w = find_nonassociativity_witness(p, c.window, c.max_axis);
    if (!w) {
      ws.push_back({{"pairing", pairing_name(p)}, {"witness", nullptr}});
      r.summary += pairing_name(p) + ": no witness among axes below " + std::to_string(c.max_axis) + "\n";
      r.exit_code = kExitFailure;
      continue;
    }
    ws.push_back(to_json(p, *w));
    r.summary += pairing_name(p) + ": axes (" + std::to_string(w->a) + "," + std::to_string(w->b) + "," +
                 std::to_string(w->c) + ")\n  (V+W)+U = " + w->left.to_string() + "\n  V+(W+U) = " + w->right.to_string() + "\n";
  }
  r.report["pairing_witnesses"] = std::move(ws);
  r.report["window"] = c.window;
  return r;
}

std::string to_dot(const FinSSet& X, int dim) {
  std::ostringstream out;
  out << "digraph qckit {\n";
  for (CellId v : X.cells(0)) out << "  " << quote(X.name(v)) << ";\n";
  if (dim >= 1 && X.truncation() >= 1) {
    for (CellId e : X.cells(1)) {
      out << "  " << quote(X.name(vertex_of(X, X.simplex(e), 0))) << " -> " << quote(X.name(vertex_of(X, X.simplex(e), 1)))
          << " [label=" << quote(X.name(e)) << "];\n";
    }
  }
  if (dim >= 2 && X.truncation() >= 2) {
    for (CellId t : X.cells(2)) {
      const std::string node = quote("2:" + X.name(t));
      std::string label = X.name(t) + ":";
      for (const auto& f : X.faces(t)) label += " " + describe(X, f);
      out << "  " << node << " [shape=plaintext, label=" << quote(label) << "];\n";
      for (int i = 0; i <= 2; ++i) {
        out << "  " << node << " -> " << quote(X.name(vertex_of(X, X.simplex(t), i)))
            << " [style=dotted, arrowhead=none];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

CommandResult cmd_export_dot(const CommandConfig& c) {
  const SSetPtr X = load_sset(single_input(c));
  const int d = c.dim.value_or(2);
  if (d < 0 || d > 2) throw UsageError("export-dot draws dimensions up to 2");
  CommandResult r;
  r.artifact = to_dot(*X, d);
  r.report = header(c, d);
  r.summary = count_table(*X);
  return r;
}

CommandResult dispatch(const CommandConfig& c) {
  try {
    if (c.format != "json" && c.format != "dot") throw UsageError("--format must be json or dot");
    if (c.subcommand == "check") return cmd_check(c);
    if (c.subcommand == "nerve") return cmd_nerve(c);
    if (c.subcommand == "deloop") return cmd_deloop(c);
    if (c.subcommand == "coslice") return cmd_coslice(c);
    if (c.subcommand == "core") return cmd_core(c);
    if (c.subcommand == "pi") return cmd_pi(c);
    if (c.subcommand == "verify-prop") return cmd_verify_prop(c);
    if (c.subcommand == "grassmann") return cmd_grassmann(c);
    if (c.subcommand == "export-dot") return cmd_export_dot(c);
    throw UsageError("unknown subcommand '" + c.subcommand + "'");
  } catch (const UsageError& e) {
    return {kExitUsage, {}, std::string("usage error: ") + e.what() + "\n", {}};
  } catch (const ParseError& e) {
    return {kExitUsage, {}, std::string("parse error: ") + e.what() + "\n", {}};
  } catch (const TruncationError& e) {
    return {kExitUsage, {}, std::string("dimension error: ") + e.what() + "\n", {}};
  } catch (const Error& e) {
    CommandResult r{kExitFailure, {}, std::string("rejected: ") + e.what() + "\n", {}};
    r.report = {{"report", c.subcommand}, {"version", version()}, {"seed", c.seed}, {"error", e.what()}};
    return r;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qckit: finite quasicategories, nerves, slices and cores"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  CommandConfig c;

  auto add_common = [&](CLI::App* sub, bool dim, bool output) {
    if (dim) sub->add_option("--dim", c.dim, "dimension");
    sub->add_option("--seed", c.seed, "seed recorded in the report");
    sub->add_option("--report", c.report, "write the JSON report here");
    if (output) {
      sub->add_option("-o,--output", c.output, "write the artifact here instead of stdout");
      sub->add_option("--format", c.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    }
  };

  auto* check = app.add_subcommand("check", "validate a simplicial set, poset, simplicial category, monoid spec, slice or report");
  check->add_option("input", c.inputs)->required();
  add_common(check, false, false);

  auto* nerve = app.add_subcommand("nerve", "homotopy-coherent nerve of the delooping of a monoid spec");
  nerve->add_option("spec", c.inputs)->required();
  add_common(nerve, true, true);

  auto* deloop_cmd = app.add_subcommand("deloop", "write the one-object simplicial category of a monoid spec");
  deloop_cmd->add_option("spec", c.inputs)->required();
  add_common(deloop_cmd, false, false);
  deloop_cmd->add_option("-o,--output", c.output, "write the category here instead of stdout");

  auto* cos = app.add_subcommand("coslice", "coslice under a vertex, or any slice presentation");
  cos->add_option("input", c.inputs)->required();
  cos->add_option("--at", c.at, "anchor vertex");
  add_common(cos, true, true);

  auto* core_cmd = app.add_subcommand("core", "maximal sub-Kan complex on invertible edges");
  core_cmd->add_option("sset", c.inputs)->required();
  add_common(core_cmd, true, true);

  auto* pi = app.add_subcommand("pi", "pi0 and pi1");
  pi->add_option("sset", c.inputs)->required();
  pi->add_option("--vertex", c.vertex, "base point (default: every vertex)");
  add_common(pi, false, false);

  auto* vp = app.add_subcommand("verify-prop", "run the coslice-core pipeline on a monoid spec");
  vp->add_option("spec", c.inputs)->required();
  add_common(vp, true, false);

  auto* gr = app.add_subcommand("grassmann", "block sums of rational subspaces");
  gr->add_flag("--assoc-check", c.assoc_check, "boxplus associativity on seeded random triples");
  gr->add_flag("--pairing-witness", c.pairing_witness, "search axis lines for a non-associative pairing sum");
  gr->add_option("--trials", c.trials, "random triples for --assoc-check");
  gr->add_option("--pairing", c.pairing, "cantor, interleave, szudzik or all");
  gr->add_option("--window", c.window, "coordinate window for pairing sums");
  gr->add_option("--max-axis", c.max_axis, "axes searched for witnesses");
  add_common(gr, false, false);

  auto* dot = app.add_subcommand("export-dot", "DOT drawing of vertices, edges and 2-cells");
  dot->add_option("sset", c.inputs)->required();
  add_common(dot, true, false);
  dot->add_option("-o,--output", c.output, "write the DOT file here instead of stdout");

  std::vector<std::string> argv_store{"qckit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  CommandResult r = dispatch(c);
  try {
    if (!r.artifact.empty()) {
      if (c.output.empty()) {
        out << r.artifact;
      } else {
        std::ofstream f(c.output, std::ios::binary);
        if (!f) throw Error("cannot write " + c.output);
        f << r.artifact;
      }
    }
    if (!c.report.empty() && !r.report.is_null()) write_json_file(c.report, r.report);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  std::ostream& notes = r.exit_code == kExitUsage || (!r.artifact.empty() && c.output.empty()) ? err : out;
  notes << r.summary;
  return r.exit_code;
}

}  // namespace qckit::cli
