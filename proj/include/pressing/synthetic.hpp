#pragma once

#include <cstdint>
#include <vector>

#include "pressing/ingestion.hpp"

namespace pressing {

// Seeded synthetic match: 22 players on a 4-4-2-ish grid plus the ball,
// each following a smooth two-tone sinusoidal trajectory whose amplitudes,
// frequencies and phases are drawn once from the seed. Positions only (no
// velocities), so the generated stream exercises velocity estimation.
struct SyntheticMatchConfig {
  int frames = 15000;
  double frame_rate_hz = 25.0;
  std::uint64_t seed = 1;
};

std::vector<RawFrameRecord> generate_synthetic_match(const SyntheticMatchConfig& config);

// FNV-1a 64-bit over a byte string; used for determinism checks.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace pressing
