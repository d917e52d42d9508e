#pragma once

#include <optional>
#include <span>
#include <string>

#include "pressing/types.hpp"

namespace pressing {

// Logistic conversion of an intercept time against an explicit threshold:
// [1 + exp(-(pi / (sqrt(3) * sigma)) * (t_threshold - tti))]^-1.
// Strictly decreasing in tti; underflows to exactly 0.0 for huge tti.
double intercept_probability(double tti_s, double t_threshold_s, double sigma);

// Same, with the threshold and width taken from params (player targets).
double intercept_probability(double tti_s, const ModelParams& params);

// 1 - prod(1 - p_i): chance that at least one defender intercepts,
// treating the per-defender probabilities as independent.
double total_pressure(std::span<const double> probs);

// Resolves the attacking player in possession: an explicit ball_owner_id
// on the attacking side wins; otherwise the attacking player nearest the
// ball if within possession_radius_m (ties broken by smaller id);
// otherwise none.
std::optional<std::string> identify_ball_carrier(const FrameSnapshot& frame,
                                                 Side attacking_side,
                                                 const ModelParams& params);

// Full per-frame defender x target computation for one defending side.
// Targets are the attacking players (id-sorted) plus the ball as the last
// column. Rows of defenders slower than active_speed_mps are zeroed in
// prob (tti keeps raw values); with strict_filter the ball column is left
// unfiltered. When a carrier is identified its probability column becomes
// the elementwise max with the ball column, after filtering. Throws
// ValidationError when either team is empty.
PressingResult pressing_matrix(const FrameSnapshot& frame, Side defending_side,
                               const ModelParams& params);

}  // namespace pressing
