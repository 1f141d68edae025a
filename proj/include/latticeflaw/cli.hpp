#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace latticeflaw {

// Resolved command-line configuration. One of the four commands:
//   count      print the number of paths with exactly k flaws
//   table      print the full flaw-count table (formula or oracle)
//   enumerate  list member paths, optionally filtered to k flaws
//   verify     run verification suites and report pass/fail
struct RunConfig {
  std::string command;
  long long a = 1;
  long long b = 1;
  long long g = 1;
  std::optional<long long> k;
  std::string format;  // per-command default applied during parsing
  bool oracle = false;
  long long cap = 0;  // resolved from --oracle-cap, LATTICEFLAW_CAP, default
  int jobs = 1;
  std::string suite = "all";
  std::string trace_path;
};

// Executes a resolved configuration. Returns the process exit code:
// 0 success, 1 verification failure, 2 usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses `args` (no program name) and executes. Same exit codes; parse
// and validation problems print to `err` and return 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace latticeflaw
