#pragma once

// cuspcheck subcommands. Every report is printed either as a human table or,
// with --format=machine, as a single JSON object on one line whose "report"
// field names the command.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/descriptor.hpp"
#include "cusp/branchdata.hpp"

namespace cuspcli {

enum ExitCode : int {
  exit_ok = 0,
  exit_gate_failed = 1,
  exit_invalid_input = 2,
  exit_internal_error = 3,
};

/// argv-style entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Per-cusp record of `branch-invariants`; the fields needing Newton pairs
/// are empty for generator-only cusps.
struct BranchRecord {
  std::optional<std::vector<cusp::NewtonPair>> newton_pairs;
  std::vector<std::int64_t> splice_decorations;
  std::vector<std::int64_t> generators;
  std::int64_t delta = 0;
  std::int64_t mu = 0;
  std::int64_t conductor = 0;
  std::optional<std::vector<cusp::MultiplicityRun>> multiplicities;
  std::optional<std::int64_t> inner;
  std::optional<std::int64_t> outer;
  std::optional<std::int64_t> free_points;
  std::optional<std::int64_t> tau_es;
  std::optional<std::int64_t> mbar;
  std::optional<std::vector<std::string>> spectrum;

  friend bool operator==(const BranchRecord&, const BranchRecord&) = default;
};

BranchRecord branch_record(const CuspDescriptor& c);
nlohmann::json to_json(const BranchRecord& r);
BranchRecord branch_record_from_json(const nlohmann::json& j);

/// "d:p,q[,p,q...]" as used by --surgery.
struct SurgerySpec {
  std::int64_t degree = 0;
  std::vector<std::int64_t> numbers;
};
SurgerySpec parse_surgery_spec(const std::string& text);

}  // namespace cuspcli
