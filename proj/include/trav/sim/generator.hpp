#pragma once

#include <cstdint>

#include "trav/sim/frame.hpp"
#include "trav/sim/scenario.hpp"

namespace trav::sim {

/// Deterministic for fixed (scenario, global_index, seed): per-pixel
/// features come from a counter-based RNG, prompts from a derived stream.
/// Prompts land only on traversable truth pixels.
Frame generate_frame(const Scenario& scenario, int global_index,
                     std::uint64_t seed);

/// Single-thread reference; bitwise identical to generate_frame.
Frame generate_frame_serial(const Scenario& scenario, int global_index,
                            std::uint64_t seed);

}  // namespace trav::sim
