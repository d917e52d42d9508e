#pragma once

#include <string>

#include "pressing/ingestion.hpp"
#include "pressing/types.hpp"

namespace pressing {

enum class Mode { players, passlanes, both };
enum class SideSelection { home, away, both };
enum class OutputFormat { jsonl, csv };

const char* to_string(Mode m);
const char* to_string(SideSelection s);
const char* to_string(OutputFormat f);

// Settings that shape the output stream; echoed in the run manifest.
struct OutputOptions {
  Mode mode = Mode::players;
  SideSelection sides = SideSelection::both;
  OutputFormat format = OutputFormat::jsonl;
  int smoothing_window = 1;
  bool strict = false;
};

// Appends v at 9 significant digits ("%.9g"), the fixed precision used for
// all computed output so goldens stay byte-stable.
void append_g9(std::string& out, double v);

// Appends v at full round-trip precision ("%.17g"); used for the tracking
// input schema.
void append_g17(std::string& out, double v);

// Appends s as a JSON string literal, escaping per RFC 8259.
void append_json_string(std::string& out, std::string_view s);

// First output line: the resolved parameter set and model flags.
std::string manifest_line(const ModelParams& params, const OutputOptions& options);

// One JSONL line (with trailing newline) for a computed frame.
// `mode` names the variant the result came from (players | passlanes).
void append_result_jsonl(std::string& out, const PressingResult& result, Mode mode);

// Marker line for a pass-lane frame with no identifiable carrier.
void append_no_carrier_jsonl(std::string& out, const FrameSnapshot& frame,
                             Side defending_side);

// Long-format CSV: one row per (defender, target) cell.
std::string csv_header();
void append_result_csv(std::string& out, const PressingResult& result, Mode mode);

// Tracking input schema (JSON Lines) writer; parse_frame_line round-trips
// its output exactly.
void append_input_jsonl(std::string& out, const RawFrameRecord& record);

}  // namespace pressing
