// JSON interchange for simplicial sets, posets, simplicial categories, monoid
// specs, slice presentations and reports.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qckit/enriched.hpp"
#include "qckit/grassmann.hpp"
#include "qckit/join.hpp"
#include "qckit/monoid.hpp"
#include "qckit/poset.hpp"
#include "qckit/proposition.hpp"
#include "qckit/quasicat.hpp"
#include "qckit/sset.hpp"

namespace qckit {

using Json = nlohmann::json;

/// Malformed input. The message carries the file and a line:column or a
/// JSON pointer to the offending value.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Reads and parses a JSON file. Throws ParseError with line and column.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

// Simplices are {"cell": name, "epi": [values]}.
Json to_json(const FinSSet& X, const SimplexRef& s);
SimplexRef simplex_from_json(const FinSSet& X, const Json& j);

Json to_json(const FinSSet& X);
FinSSet sset_from_json(const Json& j);
/// An inline simplicial set, or a string naming a file relative to `dir`.
SSetPtr sset_from_ref(const Json& j, const std::filesystem::path& dir);

Json to_json(const FinPoset& P);
FinPoset poset_from_json(const Json& j);

/// Homs are inlined unless `hom_refs` names a file per object pair (row
/// major); comp tables run up to `max_level`.
Json to_json(const SCat& D, int max_level, const std::vector<std::string>& hom_refs = {});
SCat scat_from_json(const Json& j, const std::filesystem::path& dir = {});

Json to_json(const MonoidSpec& spec);
MonoidSpec monoid_spec_from_json(const Json& j);

/// {"source": sset or file, "assignment": {cell: simplex}} into `target`.
Json to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const Json& j, const SSetPtr& target, const std::filesystem::path& dir = {});

struct SliceRequest {
  SlicePresentation presentation;
  int dim{1};
};
SliceRequest slice_request_from_json(const Json& j, const std::filesystem::path& dir = {});

enum class FileKind { sset, poset, scat, monoid_spec, slice, report, unknown };
FileKind detect_kind(const Json& j);
std::string kind_name(FileKind k);

// Report fragments.
Json to_json(const FinSSet& X, const HornProblem& p);
Json to_json(const FinSSet& X, const HornVerdict& v);
Json to_json(const FiniteGroup& G);
Json to_json(const PropositionReport& R);
Json to_json(const RationalSubspace& V);
Json to_json(const AssocCheck& c);
Json to_json(Pairing p, const NonAssociativityWitness& w);

}  // namespace qckit
