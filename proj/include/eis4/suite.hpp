#pragma once

#include <string>
#include <vector>

namespace eis4 {

struct ClaimResult {
  std::string id;
  std::string group;
  std::string params;
  bool pass = false;
  std::string detail;
  double wall_seconds = 0;  // reported on stderr only, so stdout stays byte-stable
};

struct RunManifest {
  std::string suite;
  std::vector<ClaimResult> claims;
  bool pass = false;
};

struct SuiteOptions {
  std::string only;            // group filter; empty runs everything
  bool paper_literal = false;  // use the printed placement of the doubled a~ term
  int terms = 30;
  int jobs = 1;                // claims run concurrently when > 1; output order is fixed
};

/// Group names accepted by SuiteOptions::only.
const std::vector<std::string>& suite_groups();

/// Runs every reproducible claim in a fixed order. Throws std::invalid_argument for an
/// unknown group filter.
RunManifest paper_suite(const SuiteOptions& opts);

}  // namespace eis4
