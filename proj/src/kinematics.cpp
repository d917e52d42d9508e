#include "pressing/kinematics.hpp"

#include <cmath>
#include <numbers>

namespace pressing {

double intercept_time_core(const PlayerState& defender, Vec2 target_pos,
                           Vec2 target_vel, const ModelParams& params) {
  // Target projected by its full velocity vector (implicit 1 s horizon),
  // defender by reaction_time_s at current velocity. The asymmetry is part
  // of the model.
  const Vec2 target_proj = target_pos + target_vel;
  const Vec2 defender_proj =
      defender.position + defender.velocity * params.reaction_time_s;
  return vec_norm(target_proj - defender_proj) / params.v_max_mps;
}

double angle_penalty(const PlayerState& defender, Vec2 target_pos,
                     Vec2 target_vel, const ModelParams& params) {
  const Vec2 u = defender.velocity;
  const Vec2 target_proj = target_pos + target_vel;
  // Default reading measures the heading against the vector from the
  // defender to the projected target; the literal reading uses the
  // absolute projected position and is origin-dependent.
  const Vec2 v =
      params.literal_eq3 ? target_proj : target_proj - defender.position;

  const double u_norm = vec_norm(u);
  const double v_norm = vec_norm(v);
  if (u_norm == 0.0 || v_norm == 0.0) {
    return 0.0;  // no heading to penalize, or already in contact
  }

  // Angle between u and v in [0, pi]. atan2(|cross|, dot) equals the
  // clamped-arccos formulation but stays well-conditioned near collinear
  // inputs and never produces NaN.
  const double beta = std::atan2(std::abs(vec_cross(u, v)), vec_dot(u, v));
  return u_norm * beta / std::numbers::pi;
}

double intercept_time(const PlayerState& defender, Vec2 target_pos,
                      Vec2 target_vel, const ModelParams& params) {
  return params.reaction_time_s +
         intercept_time_core(defender, target_pos, target_vel, params) +
         angle_penalty(defender, target_pos, target_vel, params);
}

}  // namespace pressing
