#pragma once

// Randomized, seeded verification of the theory's claims.  A claim is PASS
// when every sampled check holds; FLAG when sampled evidence disagrees with
// a literal reading of the statement.  FLAG records carry evidence that can
// be re-verified from the JSON alone (see replay_evidence).

#include <optional>
#include <string>
#include <vector>

#include "jacobi/json_io.hpp"
#include "jacobi/sampler.hpp"

namespace jacobi::audit {

using io::json;

enum class Status { Pass, Flag };

struct ClaimRecord {
  std::string claim_id;
  Status status = Status::Pass;
  /// Short tag of a known discrepancy (A1, A2, A3, B1, B2, S1), if any.
  std::optional<std::string> finding;
  long trials = 0;
  std::string description;
  json evidence = json::array();
};

std::vector<std::string> claim_ids();

/// Records sorted by claim_id.  A pure function of cfg.
std::vector<ClaimRecord> run_audit(const SamplerConfig& cfg, bool parallel = true);

/// {"config": .., "claims": [..], "summary": {"pass": n, "flag": m}}.
json report_json(const std::vector<ClaimRecord>& records, const SamplerConfig& cfg);
std::string report_text(const std::vector<ClaimRecord>& records);
json record_json(const ClaimRecord& record);

/// Re-checks a serialized FLAG record's evidence with exact predicates only.
/// Returns false for records whose evidence does not re-verify (or that have
/// no known finding).
bool replay_evidence(const json& record);

}  // namespace jacobi::audit
