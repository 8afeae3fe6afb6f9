#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trav::sim {

/// Feature distribution of one terrain type: pixels covered by the class
/// draw features from N(feature_mean, diag(feature_std^2)).
struct TerrainClass {
    int id = 0;
    std::vector<double> feature_mean;
    std::vector<double> feature_std;  // elementwise >= 1e-6
    bool traversable = false;
};

/// One stream block: frame_count frames of a scene whose image is split
/// into equal-height horizontal bands, one terrain class per band.
struct Block {
    int scene_id = 0;
    std::vector<int> band_classes;  // indices into Scenario::classes
    int frame_count = 0;
};

struct Scenario {
    std::vector<TerrainClass> classes;
    std::vector<Block> blocks;
    int feature_dim = 64;
    int width = 64;
    int height = 64;
    std::uint64_t seed = 0;
    int prompt_min = 5;
    int prompt_max = 20;

    int total_frames() const;

    /// Block containing a global frame index; throws std::out_of_range.
    const Block& block_for_frame(int global_index) const;

    std::vector<int> scene_ids() const;  // distinct, in first-seen order

    /// Strict checks applied when a scenario enters through config files.
    /// Hand-built test scenarios may bypass this (degenerate layouts).
    void validate() const;
};

}  // namespace trav::sim
