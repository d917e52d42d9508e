#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pressing/vec2.hpp"

namespace pressing {

enum class Side { home, away };

inline Side opposite(Side s) { return s == Side::home ? Side::away : Side::home; }

inline const char* to_string(Side s) { return s == Side::home ? "home" : "away"; }

struct PlayerState {
  std::string player_id;
  Vec2 position;  // m
  Vec2 velocity;  // m/s
};

struct BallState {
  Vec2 position;  // m
  Vec2 velocity;  // m/s
};

// One fully resolved tracking frame. Player ids are unique across both
// teams; ball_owner_id, when set, references one of them.
struct FrameSnapshot {
  std::int64_t frame_id = 0;
  double timestamp_s = 0.0;
  std::vector<PlayerState> home;
  std::vector<PlayerState> away;
  BallState ball;
  std::optional<std::string> ball_owner_id;

  const std::vector<PlayerState>& side(Side s) const {
    return s == Side::home ? home : away;
  }
};

// Model constants. All strictly positive; validate() enforces that.
// sigma, t_threshold_s, active_speed_mps and passlane_t_threshold_s carry
// the published defaults; reaction_time_s and v_max_mps default to the
// values common in the simplified pitch-control lineage.
struct ModelParams {
  double reaction_time_s = 0.7;       // tau_r
  double v_max_mps = 5.0;             // v_max
  double sigma = 0.45;                // logistic width
  double t_threshold_s = 1.5;         // T for player targets
  double active_speed_mps = 2.0;      // active-pressing speed threshold
  double possession_radius_m = 1.5;   // carrier inference radius
  double passlane_t_threshold_s = 1.0;  // T for pass-lane targets

  // Compatibility switches, both default to the corrected model.
  bool literal_eq3 = false;    // angle penalty against the absolute projected
                               // position instead of the defender-relative one
  bool strict_filter = false;  // active filter leaves the ball column intact

  // Throws Error when any numeric parameter is not strictly positive.
  void validate() const;
};

// Dense row-major matrix of doubles; rows = defenders, cols = targets.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<double>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Sentinel target id for the ball column in players mode.
inline constexpr const char* kBallTargetId = "BALL";

// Per-frame output of the pressing computation. In players mode targets
// are the attacking players (id-sorted) plus the ball as the last column;
// in pass-lane mode targets are lane receiver ids and there is no ball
// column. tti holds raw intercept times; prob holds filtered
// probabilities; total_pressure is the per-column Eq.-5 aggregate.
struct PressingResult {
  std::int64_t frame_id = 0;
  double timestamp_s = 0.0;
  Side defending_side = Side::home;
  std::vector<std::string> defender_ids;
  std::vector<std::string> target_ids;
  Matrix tti;
  Matrix prob;
  std::vector<double> total_pressure;
  std::optional<std::string> carrier_id;
};

}  // namespace pressing
