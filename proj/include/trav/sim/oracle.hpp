#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trav/sim/frame.hpp"

namespace trav::sim {

struct SegmentationResult {
    std::vector<std::uint8_t> mask;  // W*H, 1 inside prompted components
    bool prompts_all_invalid = false;  // every prompt hit a non-traversable pixel
};

/// Prompt-answering stand-in for an interactive segmenter: returns the
/// union of 4-connected truth-mask components containing at least one
/// prompt. Throws std::invalid_argument on an empty prompt list.
SegmentationResult oracle_segment(const Frame& frame,
                                  std::span<const geom::PixelPrompt> prompts);

}  // namespace trav::sim
