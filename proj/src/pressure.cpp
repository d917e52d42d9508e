#include "pressing/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pressing/errors.hpp"
#include "pressing/kinematics.hpp"

namespace pressing {

namespace {

// Attacking players sorted by id so the outputs are order-independent.
std::vector<const PlayerState*> sorted_side(const FrameSnapshot& frame, Side side) {
  std::vector<const PlayerState*> out;
  out.reserve(frame.side(side).size());
  for (const PlayerState& p : frame.side(side)) {
    out.push_back(&p);
  }
  std::sort(out.begin(), out.end(), [](const PlayerState* a, const PlayerState* b) {
    return a->player_id < b->player_id;
  });
  return out;
}

}  // namespace

double intercept_probability(double tti_s, double t_threshold_s, double sigma) {
  const double steepness = std::numbers::pi / (std::numbers::sqrt3 * sigma);
  return 1.0 / (1.0 + std::exp(-steepness * (t_threshold_s - tti_s)));
}

double intercept_probability(double tti_s, const ModelParams& params) {
  return intercept_probability(tti_s, params.t_threshold_s, params.sigma);
}

double total_pressure(std::span<const double> probs) {
  double none_reaches = 1.0;
  for (double p : probs) {
    none_reaches *= 1.0 - p;
  }
  return 1.0 - none_reaches;
}

std::optional<std::string> identify_ball_carrier(const FrameSnapshot& frame,
                                                 Side attacking_side,
                                                 const ModelParams& params) {
  const std::vector<PlayerState>& attackers = frame.side(attacking_side);
  if (frame.ball_owner_id) {
    for (const PlayerState& p : attackers) {
      if (p.player_id == *frame.ball_owner_id) {
        return p.player_id;
      }
    }
    // Annotated owner is on the other side; fall through to proximity.
  }

  const PlayerState* nearest = nullptr;
  double nearest_dist = 0.0;
  for (const PlayerState& p : attackers) {
    const double dist = vec_norm(p.position - frame.ball.position);
    if (nearest == nullptr || dist < nearest_dist ||
        (dist == nearest_dist && p.player_id < nearest->player_id)) {
      nearest = &p;
      nearest_dist = dist;
    }
  }
  if (nearest != nullptr && nearest_dist <= params.possession_radius_m) {
    return nearest->player_id;
  }
  return std::nullopt;
}

PressingResult pressing_matrix(const FrameSnapshot& frame, Side defending_side,
                               const ModelParams& params) {
  const Side attacking_side = opposite(defending_side);
  if (frame.side(defending_side).empty()) {
    throw ValidationError(frame.frame_id, "defending side has no players");
  }
  if (frame.side(attacking_side).empty()) {
    throw ValidationError(frame.frame_id, "attacking side has no players");
  }

  const std::vector<const PlayerState*> defenders = sorted_side(frame, defending_side);
  const std::vector<const PlayerState*> attackers = sorted_side(frame, attacking_side);

  const std::size_t n_def = defenders.size();
  const std::size_t n_tgt = attackers.size() + 1;  // ball column last
  const std::size_t ball_col = n_tgt - 1;

  PressingResult result;
  result.frame_id = frame.frame_id;
  result.timestamp_s = frame.timestamp_s;
  result.defending_side = defending_side;
  result.defender_ids.reserve(n_def);
  for (const PlayerState* d : defenders) {
    result.defender_ids.push_back(d->player_id);
  }
  result.target_ids.reserve(n_tgt);
  for (const PlayerState* a : attackers) {
    result.target_ids.push_back(a->player_id);
  }
  result.target_ids.emplace_back(kBallTargetId);

  result.tti = Matrix(n_def, n_tgt);
  result.prob = Matrix(n_def, n_tgt);

  for (std::size_t i = 0; i < n_def; ++i) {
    const PlayerState& defender = *defenders[i];
    const bool active = vec_norm(defender.velocity) >= params.active_speed_mps;
    for (std::size_t j = 0; j < n_tgt; ++j) {
      const Vec2 target_pos =
          j == ball_col ? frame.ball.position : attackers[j]->position;
      const Vec2 target_vel =
          j == ball_col ? frame.ball.velocity : attackers[j]->velocity;
      const double tti = intercept_time(defender, target_pos, target_vel, params);
      result.tti(i, j) = tti;
      const bool filtered =
          !active && !(params.strict_filter && j == ball_col);
      result.prob(i, j) = filtered ? 0.0 : intercept_probability(tti, params);
    }
  }

  result.carrier_id = identify_ball_carrier(frame, attacking_side, params);
  if (result.carrier_id) {
    const auto it = std::find(result.target_ids.begin(), result.target_ids.end(),
                              *result.carrier_id);
    const std::size_t carrier_col =
        static_cast<std::size_t>(it - result.target_ids.begin());
    for (std::size_t i = 0; i < n_def; ++i) {
      result.prob(i, carrier_col) =
          std::max(result.prob(i, carrier_col), result.prob(i, ball_col));
    }
  }

  result.total_pressure.resize(n_tgt);
  for (std::size_t j = 0; j < n_tgt; ++j) {
    double none_reaches = 1.0;
    for (std::size_t i = 0; i < n_def; ++i) {
      none_reaches *= 1.0 - result.prob(i, j);
    }
    result.total_pressure[j] = 1.0 - none_reaches;
  }
  return result;
}

}  // namespace pressing
