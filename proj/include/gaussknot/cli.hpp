#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace gaussknot::cli {

enum class OutputMode { text, json };

struct RunConfig {
  std::string command;
  std::optional<std::string> code;
  std::optional<std::string> corpus;
  int depth = 3;
  /// Defaults to n + 3 per input.
  std::optional<std::size_t> max_chords;
  std::size_t realizability_bound = 20;
  std::size_t max_visited = 5'000'000;
  std::uint64_t seed = 1;
  /// `gen` only.
  std::size_t chords = 5;
  std::size_t count = 10;
  OutputMode output = OutputMode::text;
};

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kTruncated = 2,
  /// `verify` found a completed search where the minima differ, or projection
  /// raised an invariant.
  kCheckFailed = 3,
};

/// Runs one subcommand: parse, genus, bridges, realizable, project, orbit,
/// verify, gen. Reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gaussknot::cli
