#include <doctest.h>

#include <map>

#include "jacobi/audit.hpp"

using namespace jacobi;
using namespace jacobi::audit;

namespace {

const std::vector<ClaimRecord>& small_run() {
  static const std::vector<ClaimRecord> records = [] {
    SamplerConfig cfg;
    cfg.trials = 100;
    return run_audit(cfg);
  }();
  return records;
}

std::map<std::string, ClaimRecord> by_id(const std::vector<ClaimRecord>& records) {
  std::map<std::string, ClaimRecord> m;
  for (const auto& r : records) m.emplace(r.claim_id, r);
  return m;
}

}  // namespace

TEST_CASE("every registered claim runs once, sorted") {
  const auto& records = small_run();
  const auto ids = claim_ids();
  REQUIRE(records.size() == ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) CHECK(records[i].claim_id == ids[i]);
}

TEST_CASE("expected statuses") {
  const auto m = by_id(small_run());
  const std::map<std::string, std::string> flagged = {
      {"orbit-PiP-display", "A1"},          {"nilpotent-union-completeness", "A2"},
      {"orbit-PiZ-sheet", "A3"},            {"kc-orbit-vs-display", "B1"},
      {"kc-isotropic-coverage", "B2"},      {"sl2-Htheta-matrix-display", "S1"},
  };
  for (const auto& [id, rec] : m) {
    CAPTURE(id);
    const auto it = flagged.find(id);
    if (it == flagged.end()) {
      CHECK(rec.status == Status::Pass);
    } else {
      CHECK(rec.status == Status::Flag);
      CHECK(rec.finding == it->second);
      CHECK(replay_evidence(record_json(rec)));
    }
  }
}

TEST_CASE("serial and parallel runs agree byte for byte") {
  SamplerConfig cfg;
  cfg.trials = 50;
  cfg.seed = 7;
  CHECK(report_json(run_audit(cfg, false), cfg).dump() == report_json(run_audit(cfg, true), cfg).dump());
}

TEST_CASE("different seeds sample differently") {
  SamplerConfig a, b;
  a.trials = b.trials = 20;
  b.seed = 43;
  CHECK(report_json(run_audit(a), a).dump() != report_json(run_audit(b), b).dump());
}

TEST_CASE("tampered evidence does not replay") {
  const auto m = by_id(small_run());
  json a1 = record_json(m.at("orbit-PiP-display"));
  a1["evidence"][0]["element"]["p"] = "1";
  CHECK_FALSE(replay_evidence(a1));

  json b1 = record_json(m.at("kc-orbit-vs-display"));
  b1["evidence"][0]["h2"] = b1["evidence"][0]["h1"];
  CHECK_FALSE(replay_evidence(b1));

  json b2 = record_json(m.at("kc-isotropic-coverage"));
  b2["evidence"][0]["element"]["q"] = {{"re", "1"}, {"im", "0"}};
  CHECK_FALSE(replay_evidence(b2));

  json a2 = record_json(m.at("nilpotent-union-completeness"));
  a2["evidence"][0]["element"]["r"] = "0";
  CHECK_FALSE(replay_evidence(a2));

  CHECK_FALSE(replay_evidence(record_json(m.at("power-identity"))));
}

TEST_CASE("report shape") {
  SamplerConfig cfg;
  cfg.trials = 100;
  const json r = report_json(small_run(), cfg);
  CHECK(r["config"]["seed"] == 42);
  CHECK(r["summary"]["flag"] == 6);
  CHECK(r["summary"]["pass"].get<long>() + 6 == static_cast<long>(claim_ids().size()));
  CHECK(report_text(small_run()).find("FLAG  orbit-PiP-display [A1]") != std::string::npos);
}
