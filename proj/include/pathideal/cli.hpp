#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace pathideal {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,             // linear quotients or zero ideal; other commands succeeded
  kExitNotLinear = 1,      // not linear quotients
  kExitInputError = 2,     // bad arguments or input
  kExitDisagreement = 3,   // oracle disagreement or internal contradiction
};

struct FuzzConfig {
  std::size_t min_vertices = 6;
  std::size_t max_vertices = 9;
  std::size_t min_n = 4;
  std::size_t max_n = 6;
  std::size_t count = 100;  // instances per (vertices, n) cell
  std::uint64_t seed = 42;
  std::size_t lq_cap = 22;
  std::size_t hom_cap = 12;
  std::size_t jobs = 1;
  bool legacy_n23 = false;
};

struct FuzzDisagreement {
  std::size_t vertices = 0;
  std::size_t n = 0;
  std::size_t index = 0;
  std::uint64_t seed = 0;  // seed passed to random_tree
  std::string edges;
  std::string message;
};

struct FuzzReport {
  std::size_t instances = 0;
  std::map<std::string, std::size_t> tallies;  // verdict names, "skipped_cap", "homology_checked"
  std::vector<FuzzDisagreement> disagreements;
  double wall_seconds = 0;
};

FuzzReport run_fuzz(const FuzzConfig& config);

/// Runs `pathideal <args...>` (args exclude the program name) and returns the
/// exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathideal
