#pragma once

#include <string>
#include <vector>

#include "pressing/types.hpp"
#include "pressing/vec2.hpp"

namespace pressing {

// Carrier-to-teammate segment with both endpoint velocities.
struct PassLane {
  std::string receiver_id;
  Vec2 origin;        // carrier position
  Vec2 terminus;      // receiver position
  Vec2 origin_vel;
  Vec2 terminus_vel;
};

struct SegmentPoint {
  Vec2 point;
  double t = 0.0;  // normalized parameter, clamped to [0,1]
};

// Closest point on segment [a,b] to p. For a == b returns {a, 0}.
SegmentPoint closest_point_on_segment(Vec2 p, Vec2 a, Vec2 b);

// Velocity of the lane point at parameter t: linear interpolation of the
// endpoint velocities.
Vec2 lane_point_velocity(const PassLane& lane, double t);

// One lane per attacking teammate of the carrier, id-sorted by receiver.
// Zero-length lanes (teammate exactly on the carrier) are dropped.
std::vector<PassLane> build_pass_lanes(const FrameSnapshot& frame,
                                       Side attacking_side,
                                       const std::string& carrier_id);

// Pass-lane variant of the pressing computation: each defender targets its
// own closest point on every lane, with the interpolated lane-point
// velocity, and probabilities use passlane_t_threshold_s as T. Target ids
// are the lane receiver ids; there is no ball column. Active filtering and
// total-pressure aggregation match the players mode.
PressingResult passlane_pressing_matrix(const FrameSnapshot& frame,
                                        Side defending_side,
                                        const std::string& carrier_id,
                                        const ModelParams& params);

// Convenience overload that resolves the carrier itself; throws
// NoCarrierError when none is identifiable.
PressingResult passlane_pressing_matrix(const FrameSnapshot& frame,
                                        Side defending_side,
                                        const ModelParams& params);

}  // namespace pressing
