#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "segame/game.hpp"

namespace segame::cli {

enum ExitCode : int { kOk = 0, kIoError = 1, kUsageError = 2 };

// First line of every report file. Bump the version when the layout changes.
inline constexpr const char* kReportHeader = "# segame-report v1";
inline constexpr const char* kBenchHeader = "# segame-bench v1";

struct RunReport {
  std::string input;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  bool directed = false;
  bool overlapping = false;
  StrategyRule rule = StrategyRule::leave_baseline;
  double tau_n = 0.3;
  double gamma = 1.0;
  int max_iterations = 0;
  unsigned workers = 1;
  std::optional<std::uint64_t> seed;
  std::size_t communities = 0;
  std::size_t memberships = 0;
  std::size_t replications = 0;
  double seconds_game = 0.0;
  double seconds_overlap = 0.0;
  std::optional<double> entropy;
  std::vector<SweepRecord> sweeps;

  std::size_t iterations() const noexcept { return sweeps.size(); }
  double seconds_total() const noexcept { return seconds_game + seconds_overlap; }
  void write(std::ostream& out) const;
};

const char* rule_name(StrategyRule rule) noexcept;

// Each command takes its arguments without the subcommand name.
int cmd_detect(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_eval(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_bench(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_stats(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Full argument list after the program name, starting with the subcommand.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segame::cli
