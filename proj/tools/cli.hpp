#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wreath_id::cli {

enum ExitCode : int {
  kPass = 0,
  kClaimFailed = 1,
  kUsageError = 2,
  kBudgetOrOverflow = 3,
};

enum class Format { kJson, kTsv };

struct RunConfig {
  int r = 1;
  int n = 1;
  std::optional<int> k;
  std::optional<int> t_cap;  // defaults to n + 3
  std::uint64_t budget = 10'000'000;
  Format format = Format::kJson;
  std::optional<std::string> out_path;
  bool all_steps = false;
  std::optional<std::vector<int>> filter_eps;

  int effective_t_cap() const { return t_cap.value_or(n + 3); }
};

// Each command writes its document to `out` and returns an ExitCode.
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_table(const RunConfig& config, std::ostream& out);
int cmd_figure(const RunConfig& config, std::ostream& out);
int cmd_decompose(const RunConfig& config, std::ostream& out);

/// Parses argv (subcommand first), dispatches, and maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wreath_id::cli
