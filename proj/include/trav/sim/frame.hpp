#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trav/geom/footprint.hpp"

namespace trav::sim {

/// One timestep of the stream. Features are H x W x D row-major float32;
/// truth_mask is the simulator's per-pixel ground truth (1 = traversable).
struct Frame {
    int width = 0;
    int height = 0;
    int feature_dim = 0;
    std::vector<float> features;        // size W*H*D
    std::vector<std::uint8_t> truth_mask;  // size W*H
    std::vector<geom::PixelPrompt> prompts;
    int scene_id = -1;
    int index = 0;

    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }

    std::span<const float> pixel_features(std::size_t pixel) const {
        return {features.data() + pixel * feature_dim,
                static_cast<std::size_t>(feature_dim)};
    }
};

}  // namespace trav::sim
