#ifndef LSC_CLI_HPP
#define LSC_CLI_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lsc {

// Exit code contract: 0 pass, 1 input error, 2 theorem/locus violation,
// 3 sampling shortfall.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitShortfall = 3;

// Entry point shared by the binary and the test suites; args exclude the
// program name.
int run_cli(const std::vector<std::string>& args);

// Aggregation for verify-theorem, factored out so the exit-code contract
// is testable without fabricating pipeline runs.
struct SampleOutcome {
  std::uint64_t seed = 0;
  int projdim = -1;
  std::int64_t degree = 0;
  bool planted_ok = true;  // only meaningful in --planted mode
};

// 2 on any projdim-1 sample with degree != 20 or failed planted check,
// 3 when fewer than 80% of samples have projdim 1, else 0.
int verify_verdict(std::span<const SampleOutcome> outcomes);

}  // namespace lsc

#endif
