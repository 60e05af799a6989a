#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidlab/chain_poset.hpp"

namespace braidlab {

struct CampaignConfig {
  std::string diagram_path;
  std::string diagram_label;          // defaults to the path
  int max_len = 6;
  std::vector<WordVariant> variants;  // empty means all six
  size_t class_budget = 200'000;
  size_t poset_budget = 50'000;
  unsigned jobs = 1;
  uint64_t seed = 1;
  int sample_rounds = 20;   // random full subposets between the delta poset
  int sample_max_len = 4;   // and the full poset, per b up to this length
  int audit_tuple_len = 4;
  bool inject_fault = false;  // corrupt one table entry before auditing
};

// Everything cmd_verify needs: the JSON report, a TSV line per certified
// instance, and the exit-deciding counters.  Any must-pass instance that is
// not contractible counts as a failure; every Inconclusive verdict, even on
// informational instances, is counted separately and also blocks success.
struct CampaignResult {
  nlohmann::json report;
  std::string tsv;
  size_t failures = 0;
  size_t inconclusive = 0;

  bool pass() const { return failures == 0 && inconclusive == 0; }
};

CampaignResult run_campaign(const CampaignConfig& cfg);

}  // namespace braidlab
