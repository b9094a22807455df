#pragma once

// Golden self-test harness: each criterion replays one slice of the golden
// tables (data/golden.json) against the library and reports pass/fail with
// the citation of the mismatching record.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wk {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // counts when green; citation + computed vs expected when not
  double seconds = 0.0;
};

struct SelftestOptions {
  bool deep = false;      // include the large E8 centralizer classes
  uint64_t seed = 12345;  // sample-point seed threaded through the checks
  std::string data_dir;   // golden tables; default: $WEYLKIT_DATA_DIR, then built-in
  std::function<void(const CriterionResult&)> on_result;  // progress, per criterion
};

int num_criteria();
std::string criterion_name(int id);

// run one criterion (1-based id); throws std::out_of_range on a bad id
CriterionResult run_criterion(int id, const SelftestOptions& opt);

// run every criterion in order; on_result fires after each one
std::vector<CriterionResult> run_selftest(const SelftestOptions& opt);

}  // namespace wk
