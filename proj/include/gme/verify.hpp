#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gme/pure_gm.hpp"
#include "gme/report.hpp"
#include "gme/state_io.hpp"

namespace gme {

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Random states per sampled space (hierarchy) or per sampled family (families).
  int samples = 20;
  OptimizerOptions opts;
};

struct CheckOutcome {
  std::string name;
  bool pass = true;
  std::string detail;
  /// State that reproduces a failure; dumped next to the summary.
  std::optional<AnyState> reproducer;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckOutcome> checks;
  /// Files written by dump_reproducers.
  std::vector<std::string> reproducer_files;

  [[nodiscard]] int passed() const;
  [[nodiscard]] int failed() const;
};

/// "hierarchy", "partition", "graph", "appendix" or "families"; throws std::invalid_argument otherwise.
SuiteResult run_suite(const std::string& suite, const SuiteOptions& options);
/// Sign patterns separating measures that admit no general inequality.
SuiteResult run_incomparability(const OptimizerOptions& opts = {});

/// Writes the reproducer of every failed check into `directory` and records the paths.
void dump_reproducers(SuiteResult& result, const std::string& directory);
/// One line per check, closed by "RESULT pass=<k> fail=<j>".
std::string render_suite(const SuiteResult& result, OutputFormat format);

}  // namespace gme
