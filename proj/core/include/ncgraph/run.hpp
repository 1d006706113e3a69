#pragma once

#include <iosfwd>
#include <string>

#include "ncgraph/group.hpp"
#include "ncgraph/lattice.hpp"

namespace ncg {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

struct RunConfig {
  enum class Command { analyze, verify, export_dot, corpus };
  Command command = Command::verify;
  std::string group;        // builtin spec or group file path; empty = corpus
  std::string kind;         // graph kind (analyze / export-dot)
  std::uint32_t max_order = 0;  // 0 = command default
  std::string out;          // output path; empty = stdout
  std::string fixtures_dir; // extra group files for verify
  std::uint64_t seed = kDefaultSeed;
  std::uint32_t lattice_cap = kDefaultLatticeCap;
  unsigned jobs = 1;
};

int cmd_analyze(const RunConfig& cfg, std::ostream& log);
int cmd_verify(const RunConfig& cfg, std::ostream& log);
int cmd_export_dot(const RunConfig& cfg, std::ostream& log);
int cmd_corpus(const RunConfig& cfg, std::ostream& log);

/// Dispatches and maps exceptions to exit codes (usage 2, cap 3).
int run(const RunConfig& cfg, std::ostream& log);

/// The verify report for a config, as rendered text (used by cmd_verify and
/// by determinism tests).
std::string verify_report_text(const RunConfig& cfg, bool* any_fail);

}  // namespace ncg
