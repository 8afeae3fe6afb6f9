#include "trav/sim/scenario.hpp"

#include <algorithm>
#include <stdexcept>

namespace trav::sim {

int Scenario::total_frames() const {
    int n = 0;
    for (const auto& b : blocks) n += b.frame_count;
    return n;
}

const Block& Scenario::block_for_frame(int global_index) const {
    if (global_index < 0) throw std::out_of_range("frame index negative");
    int offset = 0;
    for (const auto& b : blocks) {
        if (global_index < offset + b.frame_count) return b;
        offset += b.frame_count;
    }
    throw std::out_of_range("frame index past end of stream");
}

std::vector<int> Scenario::scene_ids() const {
    std::vector<int> ids;
    for (const auto& b : blocks)
        if (std::find(ids.begin(), ids.end(), b.scene_id) == ids.end())
            ids.push_back(b.scene_id);
    return ids;
}

void Scenario::validate() const {
    if (feature_dim < 1) throw std::invalid_argument("feature_dim must be >= 1");
    if (width < 1 || height < 1)
        throw std::invalid_argument("image size must be >= 1");
    if (classes.empty()) throw std::invalid_argument("no terrain classes");
    if (blocks.empty()) throw std::invalid_argument("no stream blocks");
    if (prompt_min < 1 || prompt_max < prompt_min)
        throw std::invalid_argument("bad prompt count range");
    for (const auto& c : classes) {
        if (static_cast<int>(c.feature_mean.size()) != feature_dim ||
            static_cast<int>(c.feature_std.size()) != feature_dim)
            throw std::invalid_argument("terrain class dim mismatch");
        for (double s : c.feature_std)
            if (s < 1e-6)
                throw std::invalid_argument("feature_std below 1e-6");
    }
    for (const auto& b : blocks) {
        if (b.frame_count < 1)
            throw std::invalid_argument("block frame_count must be >= 1");
        if (b.band_classes.size() < 2)
            throw std::invalid_argument("block needs >= 2 terrain bands");
        bool has_trav = false, has_non = false;
        for (int ci : b.band_classes) {
            if (ci < 0 || ci >= static_cast<int>(classes.size()))
                throw std::invalid_argument("band class index out of range");
            (classes[ci].traversable ? has_trav : has_non) = true;
        }
        if (!has_trav || !has_non)
            throw std::invalid_argument(
                "block needs at least one traversable and one "
                "non-traversable class");
    }
}

}  // namespace trav::sim
