#include "pressing/passlanes.hpp"

#include <algorithm>
#include <cmath>

#include "pressing/errors.hpp"
#include "pressing/kinematics.hpp"
#include "pressing/pressure.hpp"

namespace pressing {

SegmentPoint closest_point_on_segment(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len_sq = vec_dot(ab, ab);
  if (len_sq == 0.0) {
    return {a, 0.0};
  }
  const double t = std::clamp(vec_dot(p - a, ab) / len_sq, 0.0, 1.0);
  return {a + ab * t, t};
}

Vec2 lane_point_velocity(const PassLane& lane, double t) {
  return lane.origin_vel * (1.0 - t) + lane.terminus_vel * t;
}

std::vector<PassLane> build_pass_lanes(const FrameSnapshot& frame,
                                       Side attacking_side,
                                       const std::string& carrier_id) {
  const PlayerState* carrier = nullptr;
  for (const PlayerState& p : frame.side(attacking_side)) {
    if (p.player_id == carrier_id) {
      carrier = &p;
      break;
    }
  }
  if (carrier == nullptr) {
    throw ValidationError(frame.frame_id,
                          "carrier '" + carrier_id + "' is not on the attacking side");
  }

  std::vector<PassLane> lanes;
  for (const PlayerState& teammate : frame.side(attacking_side)) {
    if (teammate.player_id == carrier_id) {
      continue;
    }
    if (teammate.position == carrier->position) {
      continue;  // degenerate zero-length lane
    }
    lanes.push_back({teammate.player_id, carrier->position, teammate.position,
                     carrier->velocity, teammate.velocity});
  }
  std::sort(lanes.begin(), lanes.end(), [](const PassLane& a, const PassLane& b) {
    return a.receiver_id < b.receiver_id;
  });
  return lanes;
}

PressingResult passlane_pressing_matrix(const FrameSnapshot& frame,
                                        Side defending_side,
                                        const std::string& carrier_id,
                                        const ModelParams& params) {
  const Side attacking_side = opposite(defending_side);
  if (frame.side(defending_side).empty()) {
    throw ValidationError(frame.frame_id, "defending side has no players");
  }

  std::vector<const PlayerState*> defenders;
  defenders.reserve(frame.side(defending_side).size());
  for (const PlayerState& p : frame.side(defending_side)) {
    defenders.push_back(&p);
  }
  std::sort(defenders.begin(), defenders.end(),
            [](const PlayerState* a, const PlayerState* b) {
              return a->player_id < b->player_id;
            });

  const std::vector<PassLane> lanes =
      build_pass_lanes(frame, attacking_side, carrier_id);

  const std::size_t n_def = defenders.size();
  const std::size_t n_lane = lanes.size();

  PressingResult result;
  result.frame_id = frame.frame_id;
  result.timestamp_s = frame.timestamp_s;
  result.defending_side = defending_side;
  result.carrier_id = carrier_id;
  result.defender_ids.reserve(n_def);
  for (const PlayerState* d : defenders) {
    result.defender_ids.push_back(d->player_id);
  }
  result.target_ids.reserve(n_lane);
  for (const PassLane& lane : lanes) {
    result.target_ids.push_back(lane.receiver_id);
  }

  result.tti = Matrix(n_def, n_lane);
  result.prob = Matrix(n_def, n_lane);

  for (std::size_t i = 0; i < n_def; ++i) {
    const PlayerState& defender = *defenders[i];
    const bool active = vec_norm(defender.velocity) >= params.active_speed_mps;
    for (std::size_t j = 0; j < n_lane; ++j) {
      const SegmentPoint target = closest_point_on_segment(
          defender.position, lanes[j].origin, lanes[j].terminus);
      const Vec2 target_vel = lane_point_velocity(lanes[j], target.t);
      const double tti = intercept_time(defender, target.point, target_vel, params);
      result.tti(i, j) = tti;
      result.prob(i, j) =
          active ? intercept_probability(tti, params.passlane_t_threshold_s,
                                         params.sigma)
                 : 0.0;
    }
  }

  result.total_pressure.resize(n_lane);
  for (std::size_t j = 0; j < n_lane; ++j) {
    double none_reaches = 1.0;
    for (std::size_t i = 0; i < n_def; ++i) {
      none_reaches *= 1.0 - result.prob(i, j);
    }
    result.total_pressure[j] = 1.0 - none_reaches;
  }
  return result;
}

PressingResult passlane_pressing_matrix(const FrameSnapshot& frame,
                                        Side defending_side,
                                        const ModelParams& params) {
  const auto carrier =
      identify_ball_carrier(frame, opposite(defending_side), params);
  if (!carrier) {
    throw NoCarrierError(frame.frame_id);
  }
  return passlane_pressing_matrix(frame, defending_side, *carrier, params);
}

}  // namespace pressing
