#pragma once

// Command-line front end: solve | batch | sweep | compare.
// Exit codes: 0 on success, 2 on any usage or validation error.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sastri::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;

struct SolveArgs {
  double a = 0.0;
  double b = 0.0;
  std::optional<double> omega_deg;
  std::optional<double> tan_half_omega;
  std::string method = "sines";  // sines | cosines | both
  std::string format = "text";   // text | json
};

struct BatchArgs {
  std::string input;
  std::string method = "sines";  // sines | cosines
  std::string format = "csv";    // csv | json
};

struct SweepArgs {
  double r_min = 0.0;
  double r_max = 0.0;
  std::size_t n = 0;
  double b = 1.0;
};

struct CompareArgs {
  std::string regime = "all";
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::string format = "text";  // text | json
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_batch(const BatchArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sastri::cli
