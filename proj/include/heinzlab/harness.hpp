#pragma once

#include "heinzlab/suites.hpp"

namespace heinzlab {

inline constexpr const char* kVersion = "1.0.0";

struct CampaignConfig {
  std::vector<std::string> suites;  // empty = all
  int trials = 1000;
  int dim_min = 1;
  int dim_max = 6;
  uint64_t seed = 0;
  double tol_rel = 1e-9;
  std::vector<NormToken> norm_tokens = default_norm_tokens();
  GridSet grids;
  bool parallel = true;
};

struct SuiteReport {
  std::string id;
  bool recorded = false;
  int trials = 0;
  int violations = 0;
  // Worst case: for violating suites the shrunk counterexample (first
  // violation for asserted suites, deepest violation for recorded ones) and
  // its slack; otherwise the minimum-slack clean case as sampled.
  double worst_slack = 0;
  InequalityCase worst_case;
  CheckResult worst_result;
};

struct CampaignReport {
  std::string version;
  CampaignConfig config;
  std::vector<SuiteReport> suites;
  bool asserted_violation = false;
  double wall_seconds = 0;  // stdout only, never serialized
};

CampaignReport run_campaign(const CampaignConfig& cfg);

// Greedy deterministic minimization of a violating case: dimension reduction,
// parameter midpointing toward canonical targets, index decoupling, entry
// rounding.  Throws parameter_error if the input does not violate.
InequalityCase shrink_case(const InequalityCase& c, const EvalCtx& ctx);

}  // namespace heinzlab
