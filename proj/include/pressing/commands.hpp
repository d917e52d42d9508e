#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pressing/serialize.hpp"
#include "pressing/types.hpp"

namespace pressing {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

struct RunConfig {
  std::string input_path;        // "-" = stdin
  std::string output_path = "-"; // "-" = stdout
  Mode mode = Mode::players;
  SideSelection sides = SideSelection::both;
  OutputFormat format = OutputFormat::jsonl;
  ModelParams params;
  int smoothing_window = 1;
  int workers = 0;  // 0 = hardware default
  bool strict = false;
};

// compute: tracking JSONL in, manifest + per-frame pressing records out.
// Frames are emitted in frame_id order regardless of parallelism.
int run_compute(const RunConfig& config, std::ostream& diagnostics);

// summary: CSV time series of total pressure on one target. `target` is a
// player id, "BALL" (requires an explicit single defending side) or
// "CARRIER" (follows possession; rows where the carrier changes are
// marked). Accepts either raw tracking input or a computed JSONL file.
int run_summary(const RunConfig& config, const std::string& target,
                std::ostream& diagnostics);

// bench: synthetic-match throughput report as one JSON object on stdout.
int run_bench(const RunConfig& config, int frames, std::uint64_t seed,
              std::ostream& diagnostics);

// validate: parse + estimate + plausibility screen; prints one line per
// warning, plus a summary line.
int run_validate(const RunConfig& config, std::ostream& diagnostics);

}  // namespace pressing
