#include "pressing/ingestion.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include <json.hpp>

namespace pressing {

namespace {

using nlohmann::json;

// The ball is tracked under this entity key; the parser rejects it as a
// player id so the two can never collide.
constexpr const char* kBallEntity = "BALL";

double require_finite(const json& value, std::size_t line_no, const std::string& path) {
  if (!value.is_number()) {
    throw ParseError(line_no, path, "expected a finite number");
  }
  const double d = value.get<double>();
  if (!std::isfinite(d)) {
    throw ParseError(line_no, path, "coordinate is not finite");
  }
  return d;
}

const json& require_key(const json& obj, const char* key, std::size_t line_no,
                        const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(line_no, path + (path.empty() ? "" : ".") + key,
                     "missing required field");
  }
  return *it;
}

std::optional<Vec2> parse_velocity(const json& obj, std::size_t line_no,
                                   const std::string& path) {
  const bool has_vx = obj.contains("vx");
  const bool has_vy = obj.contains("vy");
  if (has_vx != has_vy) {
    throw ParseError(line_no, path + (has_vx ? ".vy" : ".vx"),
                     "vx and vy must be given together");
  }
  if (!has_vx) {
    return std::nullopt;
  }
  return Vec2{require_finite(obj.at("vx"), line_no, path + ".vx"),
              require_finite(obj.at("vy"), line_no, path + ".vy")};
}

std::vector<RawPlayer> parse_team(const json& arr, const char* team,
                                  std::size_t line_no) {
  if (!arr.is_array()) {
    throw ParseError(line_no, team, "expected an array of players");
  }
  std::vector<RawPlayer> out;
  out.reserve(arr.size());
  std::size_t index = 0;
  for (const json& entry : arr) {
    const std::string path = std::string(team) + "[" + std::to_string(index) + "]";
    if (!entry.is_object()) {
      throw ParseError(line_no, path, "expected a player object");
    }
    const json& id_value = require_key(entry, "id", line_no, path);
    if (!id_value.is_string() || id_value.get<std::string>().empty()) {
      throw ParseError(line_no, path + ".id", "id must be a nonempty string");
    }
    std::string id = id_value.get<std::string>();
    if (id == kBallEntity) {
      throw ParseError(line_no, path + ".id", "'BALL' is a reserved id");
    }
    RawPlayer player;
    player.id = std::move(id);
    player.position = {
        require_finite(require_key(entry, "x", line_no, path), line_no, path + ".x"),
        require_finite(require_key(entry, "y", line_no, path), line_no, path + ".y")};
    player.velocity = parse_velocity(entry, line_no, path);
    out.push_back(std::move(player));
    ++index;
  }
  return out;
}

// Position of an entity in a record, if present. The difference stencil
// addresses the ball like a player.
std::optional<Vec2> entity_position(const RawFrameRecord& record, const std::string& id) {
  if (id == kBallEntity) {
    return record.ball.position;
  }
  for (const RawPlayer& p : record.home) {
    if (p.id == id) {
      return p.position;
    }
  }
  for (const RawPlayer& p : record.away) {
    if (p.id == id) {
      return p.position;
    }
  }
  return std::nullopt;
}

}  // namespace

RawFrameRecord parse_frame_line(std::string_view line, std::size_t line_no) {
  json root = json::parse(line, nullptr, false);
  if (root.is_discarded()) {
    throw ParseError(line_no, "", "malformed JSON");
  }
  if (!root.is_object()) {
    throw ParseError(line_no, "", "expected a frame object");
  }

  RawFrameRecord record;
  record.line_no = line_no;

  const json& frame_id = require_key(root, "frame_id", line_no, "");
  if (!frame_id.is_number_integer() || frame_id.get<std::int64_t>() < 0) {
    throw ParseError(line_no, "frame_id", "must be a non-negative integer");
  }
  record.frame_id = frame_id.get<std::int64_t>();
  record.timestamp_s =
      require_finite(require_key(root, "timestamp_s", line_no, ""), line_no, "timestamp_s");

  const json& ball = require_key(root, "ball", line_no, "");
  if (!ball.is_object()) {
    throw ParseError(line_no, "ball", "expected an object");
  }
  record.ball.position = {
      require_finite(require_key(ball, "x", line_no, "ball"), line_no, "ball.x"),
      require_finite(require_key(ball, "y", line_no, "ball"), line_no, "ball.y")};
  record.ball.velocity = parse_velocity(ball, line_no, "ball");

  record.home = parse_team(require_key(root, "home", line_no, ""), "home", line_no);
  record.away = parse_team(require_key(root, "away", line_no, ""), "away", line_no);

  std::unordered_set<std::string_view> seen;
  for (const auto* team : {&record.home, &record.away}) {
    const char* name = team == &record.home ? "home" : "away";
    std::size_t index = 0;
    for (const RawPlayer& p : *team) {
      if (!seen.insert(p.id).second) {
        throw ParseError(line_no,
                         std::string(name) + "[" + std::to_string(index) + "].id",
                         "duplicate player id '" + p.id + "'");
      }
      ++index;
    }
  }

  if (const auto it = root.find("ball_owner_id"); it != root.end() && !it->is_null()) {
    if (!it->is_string()) {
      throw ParseError(line_no, "ball_owner_id", "must be a string");
    }
    std::string owner = it->get<std::string>();
    if (!seen.contains(owner)) {
      throw ParseError(line_no, "ball_owner_id",
                       "references unknown player '" + owner + "'");
    }
    record.ball_owner_id = std::move(owner);
  }
  return record;
}

FrameReader::FrameReader(std::istream& in, bool strict) : in_(in), strict_(strict) {}

std::optional<RawFrameRecord> FrameReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    try {
      RawFrameRecord record = parse_frame_line(line, line_no_);
      if (have_prev_) {
        if (record.frame_id <= prev_frame_id_) {
          throw ValidationError(record.frame_id, "frame_id must strictly increase");
        }
        if (record.timestamp_s <= prev_timestamp_) {
          throw ValidationError(record.frame_id, "timestamp_s must strictly increase");
        }
      }
      have_prev_ = true;
      prev_frame_id_ = record.frame_id;
      prev_timestamp_ = record.timestamp_s;
      return record;
    } catch (const Error& e) {
      if (strict_) {
        throw;
      }
      ++skipped_;
      skip_messages_.push_back("line " + std::to_string(line_no_) +
                               " skipped: " + e.what());
    }
  }
  return std::nullopt;
}

struct VelocityEstimator::PendingFrame {
  RawFrameRecord record;
  bool raw_done = false;
  // entity id -> (raw velocity, came from an explicit vx/vy)
  std::unordered_map<std::string, std::pair<Vec2, bool>> raw;
};

VelocityEstimator::VelocityEstimator(int window, std::vector<Warning>* warnings)
    : window_(window), half_(window / 2), warnings_(warnings) {
  if (window < 1 || window % 2 == 0) {
    throw Error("smoothing window must be an odd integer >= 1");
  }
}

std::vector<FrameSnapshot> VelocityEstimator::push(RawFrameRecord record) {
  if (finished_) {
    throw Error("push after finish");
  }
  if (have_prev_) {
    if (record.frame_id <= prev_frame_id_) {
      throw ValidationError(record.frame_id, "frame_id must strictly increase");
    }
    if (record.timestamp_s <= prev_timestamp_) {
      throw ValidationError(record.frame_id, "timestamp_s must strictly increase");
    }
  }
  have_prev_ = true;
  prev_frame_id_ = record.frame_id;
  prev_timestamp_ = record.timestamp_s;

  buffer_.push_back(PendingFrame{std::move(record)});
  ++received_;
  return drain_ready();
}

std::vector<FrameSnapshot> VelocityEstimator::finish() {
  if (finished_) {
    return {};
  }
  finished_ = true;
  if (received_ == 1) {
    const RawFrameRecord& only = buffer_.front().record;
    bool missing = !only.ball.velocity.has_value();
    for (const auto* team : {&only.home, &only.away}) {
      for (const RawPlayer& p : *team) {
        missing = missing || !p.velocity.has_value();
      }
    }
    if (missing) {
      throw Error("single-frame stream with missing velocities; cannot differentiate");
    }
  }
  return drain_ready();
}

std::vector<FrameSnapshot> VelocityEstimator::drain_ready() {
  // Raw velocity for frame k uses the k-1 / k+1 records, so it resolves
  // once the successor has been pushed (or the stream ended).
  const std::size_t raw_limit =
      finished_ ? received_ : (received_ == 0 ? 0 : received_ - 1);
  const std::size_t first_abs = received_ - buffer_.size();

  for (std::size_t abs = first_abs; abs < raw_limit; ++abs) {
    PendingFrame& frame = buffer_[abs - first_abs];
    if (frame.raw_done) {
      continue;
    }

    auto resolve = [&](const std::string& id, Vec2 position,
                       const std::optional<Vec2>& explicit_vel) {
      if (explicit_vel) {
        frame.raw.emplace(id, std::make_pair(*explicit_vel, true));
        return;
      }
      std::optional<Vec2> prev_pos, next_pos;
      double prev_ts = 0.0, next_ts = 0.0;
      if (abs > first_abs || (abs > 0 && abs - 1 >= first_abs)) {
        const PendingFrame& prev = buffer_[abs - 1 - first_abs];
        prev_pos = entity_position(prev.record, id);
        prev_ts = prev.record.timestamp_s;
      }
      if (abs + 1 < received_) {
        const PendingFrame& next = buffer_[abs + 1 - first_abs];
        next_pos = entity_position(next.record, id);
        next_ts = next.record.timestamp_s;
      }
      const double ts = frame.record.timestamp_s;
      Vec2 v{0.0, 0.0};
      if (prev_pos && next_pos) {
        v = (*next_pos - *prev_pos) * (1.0 / (next_ts - prev_ts));
      } else if (next_pos) {
        v = (*next_pos - position) * (1.0 / (next_ts - ts));
      } else if (prev_pos) {
        v = (position - *prev_pos) * (1.0 / (ts - prev_ts));
      } else if (warnings_ != nullptr) {
        warnings_->push_back({frame.record.frame_id, id,
                              "no neighboring observation; velocity set to (0,0)",
                              0.0});
      }
      frame.raw.emplace(id, std::make_pair(v, false));
    };

    for (const auto* team : {&frame.record.home, &frame.record.away}) {
      for (const RawPlayer& p : *team) {
        resolve(p.id, p.position, p.velocity);
      }
    }
    resolve(kBallEntity, frame.record.ball.position, frame.record.ball.velocity);
    frame.raw_done = true;
  }

  // A frame is final once raw velocities exist through its smoothing
  // horizon. Emitted frames stay buffered until every later window that
  // references them has been served.
  std::vector<FrameSnapshot> out;
  while (emitted_ < received_) {
    const std::size_t horizon = emitted_ + static_cast<std::size_t>(half_);
    if (!finished_ && horizon + 1 >= received_) {
      break;
    }
    out.push_back(finalize(emitted_ - (received_ - buffer_.size())));
    ++emitted_;

    while (!buffer_.empty()) {
      const std::size_t front_abs = received_ - buffer_.size();
      const bool window_passed =
          emitted_ > front_abs + static_cast<std::size_t>(half_);
      const bool stencil_passed =
          buffer_.size() >= 2 ? buffer_[1].raw_done : finished_;
      if (window_passed && stencil_passed) {
        buffer_.pop_front();
      } else {
        break;
      }
    }
  }
  return out;
}

FrameSnapshot VelocityEstimator::finalize(std::size_t index_in_buf) {
  const std::size_t first_abs = received_ - buffer_.size();
  const std::size_t abs = first_abs + index_in_buf;
  const PendingFrame& frame = buffer_[index_in_buf];

  // Centered moving average over the frame window [abs-half, abs+half];
  // frames where the entity is absent drop out of the average. Explicit
  // velocities pass through untouched.
  auto smoothed = [&](const std::string& id) -> Vec2 {
    const auto& self = frame.raw.at(id);
    if (self.second || window_ == 1) {
      return self.first;
    }
    Vec2 sum{0.0, 0.0};
    int count = 0;
    const std::size_t lo =
        abs >= static_cast<std::size_t>(half_) ? abs - half_ : 0;
    const std::size_t hi = std::min(abs + static_cast<std::size_t>(half_),
                                    received_ - 1);
    for (std::size_t j = std::max(lo, first_abs); j <= hi; ++j) {
      const auto it = buffer_[j - first_abs].raw.find(id);
      if (it == buffer_[j - first_abs].raw.end()) {
        continue;
      }
      sum = sum + it->second.first;
      ++count;
    }
    return count > 0 ? sum * (1.0 / count) : self.first;
  };

  FrameSnapshot snapshot;
  snapshot.frame_id = frame.record.frame_id;
  snapshot.timestamp_s = frame.record.timestamp_s;
  snapshot.ball_owner_id = frame.record.ball_owner_id;
  snapshot.ball.position = frame.record.ball.position;
  snapshot.ball.velocity = smoothed(kBallEntity);

  auto convert = [&](const std::vector<RawPlayer>& team) {
    std::vector<PlayerState> out;
    out.reserve(team.size());
    for (const RawPlayer& p : team) {
      out.push_back({p.id, p.position, smoothed(p.id)});
    }
    return out;
  };
  snapshot.home = convert(frame.record.home);
  snapshot.away = convert(frame.record.away);
  return snapshot;
}

std::vector<FrameSnapshot> estimate_velocities(
    const std::vector<RawFrameRecord>& frames, int window,
    std::vector<Warning>* warnings) {
  VelocityEstimator estimator(window, warnings);
  std::vector<FrameSnapshot> out;
  out.reserve(frames.size());
  for (const RawFrameRecord& record : frames) {
    for (FrameSnapshot& snapshot : estimator.push(record)) {
      out.push_back(std::move(snapshot));
    }
  }
  for (FrameSnapshot& snapshot : estimator.finish()) {
    out.push_back(std::move(snapshot));
  }
  return out;
}

std::vector<Warning> validate_frame(const FrameSnapshot& frame,
                                    const ValidationLimits& limits) {
  std::vector<Warning> warnings;
  auto check = [&](const std::string& id, Vec2 position, Vec2 velocity) {
    const double speed = vec_norm(velocity);
    if (speed > limits.max_speed_mps) {
      warnings.push_back({frame.frame_id, id, "speed above limit", speed});
    }
    if (std::abs(position.x) > limits.pitch_halflength_m) {
      warnings.push_back({frame.frame_id, id, "x outside pitch bounds", position.x});
    }
    if (std::abs(position.y) > limits.pitch_halfwidth_m) {
      warnings.push_back({frame.frame_id, id, "y outside pitch bounds", position.y});
    }
  };
  for (const auto* team : {&frame.home, &frame.away}) {
    for (const PlayerState& p : *team) {
      check(p.player_id, p.position, p.velocity);
    }
  }
  check(kBallEntity, frame.ball.position, frame.ball.velocity);
  return warnings;
}

}  // namespace pressing
