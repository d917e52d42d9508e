#pragma once

#include "pressing/types.hpp"
#include "pressing/vec2.hpp"

namespace pressing {

// Projected-position intercept time: the defender keeps its current
// velocity for reaction_time_s, the target is projected one second ahead,
// and the remaining gap is covered at v_max. Always >= 0.
double intercept_time_core(const PlayerState& defender, Vec2 target_pos,
                           Vec2 target_vel, const ModelParams& params);

// Additive penalty for defender velocity misaligned with the target's
// projected position: ||v_i|| * beta / pi with beta the angle between the
// defender velocity and the vector toward the projected target. Zero when
// the defender is stationary or already in contact. Under
// params.literal_eq3 the angle is taken against the absolute projected
// position instead, which is origin-dependent.
double angle_penalty(const PlayerState& defender, Vec2 target_pos,
                     Vec2 target_vel, const ModelParams& params);

// Total time to intercept: reaction time + projected-gap term + angle
// penalty. Always >= params.reaction_time_s.
double intercept_time(const PlayerState& defender, Vec2 target_pos,
                      Vec2 target_vel, const ModelParams& params);

}  // namespace pressing
