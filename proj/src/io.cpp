#include "qckit/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qckit {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing key '" + key + "'");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

const std::string& as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get_ref<const std::string&>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string at(const std::string& where, const std::string& key) {
  std::string escaped;
  for (char ch : key) escaped += ch == '~' ? "~0" : ch == '/' ? "~1" : std::string(1, ch);
  return where + "/" + escaped;
}
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

CellId cell_named(const FinSSet& X, const std::string& name, const std::string& where) {
  auto c = X.find(name);
  if (!c) throw ValidationError(where + ": unknown cell '" + name + "'");
  return *c;
}

SimplexRef simplex_at(const FinSSet& X, const Json& j, const std::string& where) {
  const CellId c = cell_named(X, as_string(field(j, "cell", where), at(where, "cell")), at(where, "cell"));
  const Json& e = as_array(field(j, "epi", where), at(where, "epi"));
  std::vector<int> values;
  for (std::size_t i = 0; i < e.size(); ++i) values.push_back(as_int(e[i], at(at(where, "epi"), i)));
  try {
    MonotoneMap epi(X.dim(c), values);
    if (!epi.is_surjective()) throw ValidationError(where + ": epi " + epi.to_string() + " is not surjective onto [" +
                                                    std::to_string(X.dim(c)) + "]");
    return {epi, c};
  } catch (const IndexError& err) {
    throw ValidationError(where + ": " + err.what());
  }
}

int group_order(const std::string& s, const std::string& where) {
  if (s == "trivial") return 1;
  if (s.size() > 2 && s.starts_with("Z/")) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(s.substr(2), &used);
      if (used == s.size() - 2 && n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  fail(where, "unknown group '" + s + "' (expected \"trivial\" or \"Z/n\")");
}

std::string group_label(int n) { return n == 1 ? "trivial" : "Z/" + std::to_string(n); }

int grade_ref(const GradeMonoid& G, const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    const int g = j.get<int>();
    if (g < 0 || g >= G.size()) fail(where, "grade index out of range");
    return g;
  }
  const auto& name = as_string(j, where);
  for (int g = 0; g < G.size(); ++g)
    if (G.elements[static_cast<std::size_t>(g)] == name) return g;
  fail(where, "unknown grade '" + name + "'");
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path.string() + ": cannot write");
  out << dump(j);
}

Json to_json(const FinSSet& X, const SimplexRef& s) { return {{"cell", X.name(s.cell)}, {"epi", s.epi.values()}}; }

SimplexRef simplex_from_json(const FinSSet& X, const Json& j) { return simplex_at(X, j, ""); }

Json to_json(const FinSSet& X) {
  Json cells = Json::object(), faces = Json::object();
  for (int d = 0; d <= X.truncation(); ++d) {
    Json ids = Json::array();
    for (CellId c : X.cells(d)) {
      ids.push_back(X.name(c));
      if (d == 0) continue;
      Json fs = Json::array();
      for (const auto& f : X.faces(c)) fs.push_back(to_json(X, f));
      faces[X.name(c)] = std::move(fs);
    }
    cells[std::to_string(d)] = std::move(ids);
  }
  return {{"truncation", X.truncation()}, {"cells", std::move(cells)}, {"faces", std::move(faces)}};
}

FinSSet sset_from_json(const Json& j) {
  const int trunc = as_int(field(j, "truncation", ""), "/truncation");
  if (trunc < 0 || trunc > kMaxArity) fail("/truncation", "out of range");
  const Json& cells = field(j, "cells", "");
  if (!cells.is_object()) fail("/cells", "expected an object");
  const Json empty = Json::object();
  const Json& faces = j.contains("faces") ? j.at("faces") : empty;
  if (!faces.is_object()) fail("/faces", "expected an object");

  std::map<int, const Json*> by_dim;
  for (const auto& [key, ids] : cells.items()) {
    int d = -1;
    try {
      std::size_t used = 0;
      d = std::stoi(key, &used);
      if (used != key.size()) d = -1;
    } catch (const std::exception&) {
    }
    if (d < 0) fail(at("/cells", key), "dimension keys must be non-negative integers");
    if (d > trunc) throw ValidationError("/cells/" + key + ": cells above the truncation " + std::to_string(trunc));
    by_dim[d] = &as_array(ids, at("/cells", key));
  }

  FinSSetBuilder b(trunc);
  for (const auto& [d, ids] : by_dim) {
    for (std::size_t i = 0; i < ids->size(); ++i) {
      const std::string where = at(at("/cells", std::to_string(d)), i);
      const std::string& name = as_string((*ids)[i], where);
      if (d == 0) {
        if (b.find(name)) throw ValidationError(where + ": duplicate cell '" + name + "'");
        b.add_vertex(name);
        continue;
      }
      const std::string fw = at("/faces", name);
      if (!faces.contains(name)) fail(fw, "missing face list");
      const Json& fs = as_array(faces.at(name), fw);
      std::vector<SimplexRef> refs;
      for (std::size_t k = 0; k < fs.size(); ++k) {
        const std::string w = at(fw, k);
        const std::string& cname = as_string(field(fs[k], "cell", w), at(w, "cell"));
        auto c = b.find(cname);
        if (!c) throw ValidationError(at(w, "cell") + ": unknown or later cell '" + cname + "'");
        const Json& e = as_array(field(fs[k], "epi", w), at(w, "epi"));
        std::vector<int> values;
        for (std::size_t t = 0; t < e.size(); ++t) values.push_back(as_int(e[t], at(at(w, "epi"), t)));
        if (values.empty()) throw ValidationError(at(w, "epi") + ": empty");
        int top = 0;
        for (int v : values) top = std::max(top, v);
        try {
          refs.push_back({MonotoneMap(top, values), *c});
        } catch (const IndexError& err) {
          throw ValidationError(at(w, "epi") + ": " + err.what());
        }
      }
      try {
        b.add_cell(name, std::move(refs));
      } catch (const Error& err) {
        throw ValidationError(where + ": " + err.what());
      }
    }
  }
  for (const auto& [name, fs] : faces.items()) {
    (void)fs;
    if (!b.find(name)) throw ValidationError(at("/faces", name) + ": faces given for an unlisted cell");
  }
  FinSSet X = std::move(b).build();
  // The builder only knows value sequences; check each epi lands on its cell.
  for (std::size_t c = 0; c < X.cell_count(); ++c) {
    const auto cell = static_cast<CellId>(c);
    for (std::size_t i = 0; X.dim(cell) > 0 && i < X.faces(cell).size(); ++i) {
      const auto& f = X.faces(cell)[i];
      if (f.epi.target_arity() != X.dim(f.cell) || !f.epi.is_surjective()) {
        throw ValidationError(at(at("/faces", X.name(cell)), i) + ": epi " + f.epi.to_string() +
                              " is not a surjection onto [" + std::to_string(X.dim(f.cell)) + "]");
      }
    }
  }
  return X;
}

SSetPtr sset_from_ref(const Json& j, const std::filesystem::path& dir) {
  if (j.is_string()) {
    const auto path = dir / j.get<std::string>();
    try {
      return std::make_shared<const FinSSet>(sset_from_json(read_json_file(path)));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }
  return std::make_shared<const FinSSet>(sset_from_json(j));
}

Json to_json(const FinPoset& P) {
  Json leq = Json::array();
  for (auto [a, b] : P.strict_pairs()) leq.push_back({P.name(a), P.name(b)});
  return {{"elements", P.names()}, {"leq", std::move(leq)}};
}

FinPoset poset_from_json(const Json& j) {
  const Json& els = as_array(field(j, "elements", ""), "/elements");
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < els.size(); ++i) {
    names.push_back(as_string(els[i], at("/elements", i)));
    if (!index.emplace(names.back(), static_cast<int>(i)).second) {
      throw ValidationError(at("/elements", i) + ": duplicate element '" + names.back() + "'");
    }
  }
  const Json& leq = as_array(field(j, "leq", ""), "/leq");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < leq.size(); ++i) {
    const std::string w = at("/leq", i);
    if (!leq[i].is_array() || leq[i].size() != 2) fail(w, "expected a pair");
    int ends[2];
    for (int t = 0; t < 2; ++t) {
      const auto& v = leq[i][static_cast<std::size_t>(t)];
      if (v.is_number_integer()) {
        ends[t] = v.get<int>();
        if (ends[t] < 0 || ends[t] >= static_cast<int>(names.size())) throw ValidationError(at(w, t) + ": index out of range");
      } else {
        auto it = index.find(as_string(v, at(w, t)));
        if (it == index.end()) throw ValidationError(at(w, t) + ": unknown element");
        ends[t] = it->second;
      }
    }
    pairs.emplace_back(ends[0], ends[1]);
  }
  try {
    return FinPoset(std::move(names), pairs);
  } catch (const Error& e) {
    throw ValidationError(std::string("/leq: ") + e.what());
  }
}

Json to_json(const SCat& D, int max_level, const std::vector<std::string>& hom_refs) {
  const int n = D.object_count();
  const int L = std::min(max_level, D.hom_truncation());
  Json objects = Json::array(), homs = Json::array(), ids = Json::object(), comp = Json::array();
  for (int x = 0; x < n; ++x) objects.push_back(D.object(x));
  for (int x = 0; x < n; ++x) {
    ids[D.object(x)] = D.hom(x, x).name(D.identity(x));
    for (int y = 0; y < n; ++y) {
      if (D.hom(x, y).empty() && x != y) continue;
      const auto idx = static_cast<std::size_t>(x * n + y);
      homs.push_back({{"source", D.object(x)},
                      {"target", D.object(y)},
                      {"sset", hom_refs.empty() ? to_json(D.hom(x, y)) : Json(hom_refs.at(idx))}});
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (D.hom(x, y).empty() || D.hom(y, z).empty()) continue;
        Json levels = Json::array();
        for (int k = 0; k <= L; ++k) {
          Json rows = Json::array();
          for (const auto& g : enumerate_simplices(D.hom(y, z), k))
            for (const auto& f : enumerate_simplices(D.hom(x, y), k))
              rows.push_back({to_json(D.hom(y, z), g), to_json(D.hom(x, y), f), to_json(D.hom(x, z), D.compose(x, y, z, g, f))});
          levels.push_back(std::move(rows));
        }
        comp.push_back({{"objects", {D.object(x), D.object(y), D.object(z)}}, {"levels", std::move(levels)}});
      }
  return {{"objects", std::move(objects)}, {"homs", std::move(homs)}, {"identities", std::move(ids)}, {"comp", std::move(comp)}};
}

SCat scat_from_json(const Json& j, const std::filesystem::path& dir) {
  const Json& objs = as_array(field(j, "objects", ""), "/objects");
  std::vector<std::string> objects;
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    objects.push_back(as_string(objs[i], at("/objects", i)));
    if (!index.emplace(objects.back(), static_cast<int>(i)).second) throw ValidationError(at("/objects", i) + ": duplicate object");
  }
  const int n = static_cast<int>(objects.size());
  auto object_ref = [&](const Json& v, const std::string& w) {
    auto it = index.find(as_string(v, w));
    if (it == index.end()) throw ValidationError(w + ": unknown object '" + v.get<std::string>() + "'");
    return it->second;
  };

  auto empty = std::make_shared<const FinSSet>();
  std::vector<SSetPtr> homs(static_cast<std::size_t>(n * n), empty);
  const Json& hs = as_array(field(j, "homs", ""), "/homs");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string w = at("/homs", i);
    const int x = object_ref(field(hs[i], "source", w), at(w, "source"));
    const int y = object_ref(field(hs[i], "target", w), at(w, "target"));
    homs[static_cast<std::size_t>(x * n + y)] = sset_from_ref(field(hs[i], "sset", w), dir);
  }

  std::vector<CellId> identities;
  const Json& ids = field(j, "identities", "");
  for (int x = 0; x < n; ++x) {
    const std::string w = at("/identities", objects[static_cast<std::size_t>(x)]);
    if (!ids.contains(objects[static_cast<std::size_t>(x)])) throw ValidationError(w + ": missing identity");
    identities.push_back(cell_named(*homs[static_cast<std::size_t>(x * n + x)],
                                    as_string(ids.at(objects[static_cast<std::size_t>(x)]), w), w));
  }

  using Table = std::map<std::pair<SimplexRef, SimplexRef>, SimplexRef>;
  std::vector<BilevelMap> comps(static_cast<std::size_t>(n * n * n));
  std::set<int> tabulated;
  const Json& cs = as_array(field(j, "comp", ""), "/comp");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string w = at("/comp", i);
    const Json& os = as_array(field(cs[i], "objects", w), at(w, "objects"));
    if (os.size() != 3) fail(at(w, "objects"), "expected three objects");
    const int x = object_ref(os[0], at(at(w, "objects"), 0));
    const int y = object_ref(os[1], at(at(w, "objects"), 1));
    const int z = object_ref(os[2], at(at(w, "objects"), 2));
    const SSetPtr& G = homs[static_cast<std::size_t>(y * n + z)];
    const SSetPtr& F = homs[static_cast<std::size_t>(x * n + y)];
    const SSetPtr& H = homs[static_cast<std::size_t>(x * n + z)];
    auto table = std::make_shared<Table>();
    const Json& levels = as_array(field(cs[i], "levels", w), at(w, "levels"));
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const std::string lw = at(at(w, "levels"), k);
      const Json& rows = as_array(levels[k], lw);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string rw = at(lw, r);
        if (!rows[r].is_array() || rows[r].size() != 3) fail(rw, "expected [g, f, g.f]");
        const SimplexRef g = simplex_at(*G, rows[r][0], at(rw, 0));
        const SimplexRef f = simplex_at(*F, rows[r][1], at(rw, 1));
        const SimplexRef gf = simplex_at(*H, rows[r][2], at(rw, 2));
        if (g.dim() != static_cast<int>(k) || f.dim() != static_cast<int>(k)) throw ValidationError(rw + ": entry not at level " + std::to_string(k));
        if (!table->emplace(std::pair(g, f), gf).second) throw ValidationError(rw + ": duplicate entry");
      }
      for (const auto& g : enumerate_simplices(*G, static_cast<int>(k)))
        for (const auto& f : enumerate_simplices(*F, static_cast<int>(k)))
          if (!table->contains({g, f})) {
            throw ValidationError(lw + ": no entry for (" + describe(*G, g) + ", " + describe(*F, f) + ")");
          }
    }
    const std::string label = objects[static_cast<std::size_t>(x)] + " -> " + objects[static_cast<std::size_t>(y)] + " -> " +
                              objects[static_cast<std::size_t>(z)];
    tabulated.insert((x * n + y) * n + z);
    comps[static_cast<std::size_t>((x * n + y) * n + z)] =
        BilevelMap(G, F, H, [table, label](const SimplexRef& g, const SimplexRef& f) {
          auto it = table->find({g, f});
          if (it == table->end()) throw TruncationError("composition " + label + " not tabulated at level " + std::to_string(g.dim()));
          return it->second;
        });
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!homs[static_cast<std::size_t>(x * n + y)]->empty() && !homs[static_cast<std::size_t>(y * n + z)]->empty() &&
            !tabulated.contains((x * n + y) * n + z)) {
          throw ValidationError("/comp: no composition table for " + objects[static_cast<std::size_t>(x)] + " -> " +
                                objects[static_cast<std::size_t>(y)] + " -> " + objects[static_cast<std::size_t>(z)]);
        }
  return SCat(std::move(objects), std::move(homs), std::move(identities), std::move(comps));
}

Json to_json(const MonoidSpec& spec) {
  const GradeMonoid& G = spec.grades;
  Json table = Json::array();
  for (int a = 0; a < G.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < G.size(); ++b) row.push_back(G.elements[static_cast<std::size_t>(G.mul(a, b))]);
    table.push_back(std::move(row));
  }
  Json comps = Json::object();
  for (int g = 0; g < G.size(); ++g)
    comps[G.elements[static_cast<std::size_t>(g)]] = {{"group", group_label(spec.components[static_cast<std::size_t>(g)])}};
  return {{"grades", {{"elements", G.elements}, {"unit", G.elements[static_cast<std::size_t>(G.unit)]}, {"table", std::move(table)}}},
          {"components", std::move(comps)},
          {"truncation", spec.truncation}};
}

MonoidSpec monoid_spec_from_json(const Json& j) {
  MonoidSpec spec;
  const Json& gj = field(j, "grades", "");
  const Json& els = as_array(field(gj, "elements", "/grades"), "/grades/elements");
  GradeMonoid& G = spec.grades;
  for (std::size_t i = 0; i < els.size(); ++i) G.elements.push_back(as_string(els[i], at("/grades/elements", i)));
  if (G.elements.empty()) throw ValidationError("/grades/elements: a monoid needs at least the unit");
  G.unit = grade_ref(G, field(gj, "unit", "/grades"), "/grades/unit");
  const Json& tab = as_array(field(gj, "table", "/grades"), "/grades/table");
  if (static_cast<int>(tab.size()) != G.size()) throw ValidationError("/grades/table: expected " + std::to_string(G.size()) + " rows");
  for (std::size_t a = 0; a < tab.size(); ++a) {
    const std::string w = at("/grades/table", a);
    const Json& row = as_array(tab[a], w);
    if (static_cast<int>(row.size()) != G.size()) throw ValidationError(w + ": expected " + std::to_string(G.size()) + " entries");
    std::vector<int> r;
    for (std::size_t b = 0; b < row.size(); ++b) r.push_back(grade_ref(G, row[b], at(w, b)));
    G.table.push_back(std::move(r));
  }
  spec.components.assign(static_cast<std::size_t>(G.size()), 1);
  if (j.contains("components")) {
    const Json& cs = j.at("components");
    if (!cs.is_object()) fail("/components", "expected an object");
    for (const auto& [name, c] : cs.items()) {
      const std::string w = at("/components", name);
      const int g = grade_ref(G, Json(name), w);
      spec.components[static_cast<std::size_t>(g)] = group_order(as_string(field(c, "group", w), at(w, "group")), at(w, "group"));
    }
  }
  if (j.contains("truncation")) spec.truncation = as_int(j.at("truncation"), "/truncation");
  return spec;
}

Json to_json(const SimplicialMap& f) {
  Json assignment = Json::object();
  for (std::size_t c = 0; c < f.source().cell_count(); ++c)
    assignment[f.source().name(static_cast<CellId>(c))] = to_json(f.target(), f[static_cast<CellId>(c)]);
  return {{"source", to_json(f.source())}, {"assignment", std::move(assignment)}};
}

SimplicialMap map_from_json(const Json& j, const SSetPtr& target, const std::filesystem::path& dir) {
  const SSetPtr source = sset_from_ref(field(j, "source", ""), dir);
  const Json& as = field(j, "assignment", "");
  std::vector<SimplexRef> assignment;
  for (std::size_t c = 0; c < source->cell_count(); ++c) {
    const std::string& name = source->name(static_cast<CellId>(c));
    const std::string w = at("/assignment", name);
    if (!as.contains(name)) throw ValidationError(w + ": missing image");
    assignment.push_back(simplex_at(*target, as.at(name), w));
  }
  SimplicialMap f(source, target, std::move(assignment));
  if (auto r = validate_map(f); !r.ok()) throw ValidationError("/assignment: " + r.violations.front());
  return f;
}

SliceRequest slice_request_from_json(const Json& j, const std::filesystem::path& dir) {
  const SSetPtr base = sset_from_ref(field(j, "base", ""), dir);
  const std::string side = j.contains("side") ? as_string(j.at("side"), "/side") : std::string("under");
  if (side != "under" && side != "over") fail("/side", "expected \"under\" or \"over\"");
  const SliceSide s = side == "under" ? SliceSide::under : SliceSide::over;
  const int dim = j.contains("dim") ? as_int(j.at("dim"), "/dim") : 1;
  if (dim < 0) fail("/dim", "must be non-negative");
  const Json& anchor = field(j, "anchor", "");
  if (anchor.contains("vertex")) {
    const CellId x = cell_named(*base, as_string(anchor.at("vertex"), "/anchor/vertex"), "/anchor/vertex");
    return {vertex_slice(base, x, s), dim};
  }
  if (anchor.contains("map")) {
    const Json& m = anchor.at("map");
    return {{base, map_from_json(m.is_string() ? read_json_file(dir / m.get<std::string>()) : m, base, dir), s}, dim};
  }
  fail("/anchor", "expected {\"vertex\": id} or {\"map\": file}");
}

FileKind detect_kind(const Json& j) {
  if (!j.is_object()) return FileKind::unknown;
  if (j.contains("report")) return FileKind::report;
  if (j.contains("cells")) return FileKind::sset;
  if (j.contains("objects")) return FileKind::scat;
  if (j.contains("grades")) return FileKind::monoid_spec;
  if (j.contains("base") && j.contains("anchor")) return FileKind::slice;
  if (j.contains("elements") && j.contains("leq")) return FileKind::poset;
  return FileKind::unknown;
}

std::string kind_name(FileKind k) {
  switch (k) {
    case FileKind::sset: return "simplicial set";
    case FileKind::poset: return "poset";
    case FileKind::scat: return "simplicial category";
    case FileKind::monoid_spec: return "monoid spec";
    case FileKind::slice: return "slice presentation";
    case FileKind::report: return "report";
    case FileKind::unknown: return "unknown";
  }
  return "unknown";
}

Json to_json(const FinSSet& X, const HornProblem& p) {
  Json faces = Json::array();
  for (int k = 0; k <= p.n; ++k) faces.push_back(k == p.i ? Json(nullptr) : to_json(X, p.faces[static_cast<std::size_t>(k)]));
  return {{"n", p.n}, {"i", p.i}, {"faces", std::move(faces)}};
}

Json to_json(const FinSSet& X, const HornVerdict& v) {
  Json out{{"ok", v.ok}, {"horns_checked", v.horns_checked}};
  if (v.witness) out["witness"] = to_json(X, *v.witness);
  return out;
}

Json to_json(const FiniteGroup& G) { return {{"order", G.order()}, {"identity", G.identity}, {"table", G.table}}; }

Json to_json(const PropositionReport& R) {
  Json checks = Json::array();
  for (const auto& c : R.checks) {
    checks.push_back({{"id", c.id},
                      {"title", c.title},
                      {"pass", c.pass},
                      {"report_only", c.report_only},
                      {"counterexamples", c.counterexamples},
                      {"notes", c.notes}});
  }
  Json pi1 = Json::object();
  for (const auto& [v, order] : R.pi1_orders) pi1[v] = order;
  return {{"passed", R.passed()},
          {"dims", R.dims},
          {"nerve_counts", R.nerve_counts},
          {"coslice_counts", R.coslice_counts},
          {"core_counts", R.core_counts},
          {"pi0_core", R.pi0_core},
          {"pi0_monoid", R.pi0_monoid},
          {"pi1_orders", std::move(pi1)},
          {"core_kan", R.core_kan},
          {"nerve_quasicategory", R.nerve_quasicategory},
          {"isomorphic_components", R.isomorphic_components},
          {"checks", std::move(checks)}};
}

Json to_json(const RationalSubspace& V) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < V.basis().rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < V.basis().cols(); ++j) row.push_back(V.basis()(i, j).str());
    rows.push_back(std::move(row));
  }
  return {{"copies", V.copies()}, {"base_dim", V.base_dim()}, {"rank", V.rank()}, {"basis", std::move(rows)}};
}

Json to_json(const AssocCheck& c) { return {{"trials", c.trials}, {"failures", c.failures}, {"ranks_add", c.ranks_add}}; }

Json to_json(Pairing p, const NonAssociativityWitness& w) {
  return {{"pairing", pairing_name(p)},
          {"axes", {w.a, w.b, w.c}},
          {"left", to_json(w.left)},
          {"right", to_json(w.right)}};
}

}  // namespace qckit
