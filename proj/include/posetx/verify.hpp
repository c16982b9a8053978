#pragma once
// Named verification checks over the whole library: structural laws,
// counting-algorithm agreement, golden-table comparisons, matrix identities,
// bounds and divisibility sweeps. The CLI `catalog verify` and the
// acceptance runner both drive this list.

#include <cstdint>
#include <string>
#include <vector>

namespace posetx {

struct VerifyScope {
  int k_max = 5;    // caps the point-count sweeps (each check also has its own cap)
  int m_max = 6;    // caps the exponent sweeps
  std::uint64_t seed = 20260801;
  int random_vertical_trials = 200;
  int threads = 1;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// All check names, in execution order.
const std::vector<std::string>& verify_check_names();

/// Runs every check; never throws on verification failures (they are
/// reported), only on internal errors.
std::vector<CheckResult> run_verify_checks(const VerifyScope& scope);

}  // namespace posetx
