#pragma once

#include <cstdint>
#include <deque>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pressing/errors.hpp"
#include "pressing/types.hpp"

namespace pressing {

// Parsed input frame before velocity resolution: velocities are optional.
struct RawPlayer {
  std::string id;
  Vec2 position;
  std::optional<Vec2> velocity;
};

struct RawBall {
  Vec2 position;
  std::optional<Vec2> velocity;
};

struct RawFrameRecord {
  std::int64_t frame_id = 0;
  double timestamp_s = 0.0;
  std::vector<RawPlayer> home;
  std::vector<RawPlayer> away;
  RawBall ball;
  std::optional<std::string> ball_owner_id;
  std::size_t line_no = 0;  // 1-based input line, kept for diagnostics
};

// Parses one JSON-Lines frame object. Throws ParseError (with line number
// and field path) on malformed JSON, missing fields, non-finite
// coordinates, negative frame_id or duplicate player ids.
RawFrameRecord parse_frame_line(std::string_view line, std::size_t line_no);

// Pulls frames off a text stream. Strict mode rethrows the first
// ParseError or ordering violation; lenient mode skips bad lines and
// out-of-order frames, counting them. Blank lines are ignored.
class FrameReader {
 public:
  FrameReader(std::istream& in, bool strict);

  // Next well-formed record, or nullopt at end of stream.
  std::optional<RawFrameRecord> next();

  std::size_t skipped() const { return skipped_; }
  const std::vector<std::string>& skip_messages() const { return skip_messages_; }

 private:
  std::istream& in_;
  bool strict_;
  std::size_t line_no_ = 0;
  std::size_t skipped_ = 0;
  bool have_prev_ = false;
  std::int64_t prev_frame_id_ = 0;
  double prev_timestamp_ = 0.0;
  std::vector<std::string> skip_messages_;
};

// Streaming velocity resolution. Entities with explicit velocities pass
// through untouched; everything else gets a finite-difference estimate
// (central in the interior, one-sided at stream edges and around gaps,
// (0,0) with a warning when the entity has no usable neighbor) followed by
// an optional centered moving average over `window` frames. Lookahead is
// bounded by the window, so the pipeline stays streaming.
class VelocityEstimator {
 public:
  // window must be an odd integer >= 1; 1 means no smoothing.
  explicit VelocityEstimator(int window, std::vector<Warning>* warnings = nullptr);

  // Feed the next record (frame_id and timestamp must strictly increase;
  // throws ValidationError otherwise). Returns the frames that became
  // final, in order.
  std::vector<FrameSnapshot> push(RawFrameRecord record);

  // Flush the tail of the stream. Throws Error for a single-frame stream
  // with any missing velocity.
  std::vector<FrameSnapshot> finish();

 private:
  struct PendingFrame;

  FrameSnapshot finalize(std::size_t index);
  std::vector<FrameSnapshot> drain_ready();

  int window_;
  int half_;
  std::vector<Warning>* warnings_;
  std::deque<PendingFrame> buffer_;
  std::size_t emitted_ = 0;     // frames already emitted (absolute count)
  std::size_t received_ = 0;    // frames pushed (absolute count)
  bool finished_ = false;
  bool have_prev_ = false;
  std::int64_t prev_frame_id_ = 0;
  double prev_timestamp_ = 0.0;
};

// Batch convenience wrapper over VelocityEstimator.
std::vector<FrameSnapshot> estimate_velocities(
    const std::vector<RawFrameRecord>& frames, int window = 1,
    std::vector<Warning>* warnings = nullptr);

struct ValidationLimits {
  double max_speed_mps = 12.0;
  double pitch_halflength_m = 60.0;
  double pitch_halfwidth_m = 40.0;
};

// Physical-plausibility screen: warns (never errors) about speeds above
// max_speed_mps and positions outside the generous pitch box.
std::vector<Warning> validate_frame(const FrameSnapshot& frame,
                                    const ValidationLimits& limits = {});

}  // namespace pressing
