// The qckit command-line surface. Each cmd_* is deterministic in its config.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qckit/io.hpp"

namespace qckit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Nerve enumeration never goes above this, whatever QCKIT_MAX_DIM says.
inline constexpr int kHardDimLimit = 4;
inline constexpr int kDefaultDimCap = 3;

std::string version();

/// The capability cap: QCKIT_MAX_DIM if set, else kDefaultDimCap. Throws
/// UsageError above kHardDimLimit or on a malformed value.
int dim_cap();

class UsageError : public Error {
 public:
  using Error::Error;
};

struct CommandConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::optional<int> dim;
  std::uint64_t seed{1};
  std::string output;  // artifact path; empty means stdout
  std::string report;  // report path; empty means no report file
  std::string format{"json"};
  std::string at;      // coslice anchor vertex
  std::string vertex;  // pi base vertex; empty means every vertex
  bool assoc_check{false};
  bool pairing_witness{false};
  int trials{1000};
  std::string pairing{"all"};
  int window{32};
  int max_axis{4};
};

struct CommandResult {
  int exit_code{kExitOk};
  /// The produced object (sset, DOT text, ...), empty if none.
  std::string artifact;
  /// Human-readable lines for stdout.
  std::string summary;
  Json report;
};

CommandResult cmd_check(const CommandConfig& c);
CommandResult cmd_nerve(const CommandConfig& c);
CommandResult cmd_deloop(const CommandConfig& c);
CommandResult cmd_coslice(const CommandConfig& c);
CommandResult cmd_core(const CommandConfig& c);
CommandResult cmd_pi(const CommandConfig& c);
CommandResult cmd_verify_prop(const CommandConfig& c);
CommandResult cmd_grassmann(const CommandConfig& c);
CommandResult cmd_export_dot(const CommandConfig& c);

/// DOT text for the vertices and nondegenerate edges of X, with 2-cells
/// drawn as labelled points when dim >= 2.
std::string to_dot(const FinSSet& X, int dim);

/// Dispatches on c.subcommand; errors become exit codes with a message in
/// summary.
CommandResult dispatch(const CommandConfig& c);

/// Full command line: parses, runs, writes outputs. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qckit::cli
