#include "trav/sim/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace trav::sim {

SegmentationResult oracle_segment(const Frame& frame,
                                  std::span<const geom::PixelPrompt> prompts) {
    if (prompts.empty()) throw std::invalid_argument("no prompts");
    const int w = frame.width, h = frame.height;
    SegmentationResult res;
    res.mask.assign(static_cast<std::size_t>(w) * h, 0);

    std::vector<std::int32_t> stack;
    bool any_valid = false;
    for (const auto& pr : prompts) {
        const int x = static_cast<int>(std::floor(pr.u));
        const int y = static_cast<int>(std::floor(pr.v));
        if (x < 0 || x >= w || y < 0 || y >= h) continue;
        const std::int32_t p = y * w + x;
        if (!frame.truth_mask[p]) continue;
        any_valid = true;
        if (res.mask[p]) continue;
        res.mask[p] = 1;
        stack.push_back(p);
        while (!stack.empty()) {
            const std::int32_t q = stack.back();
            stack.pop_back();
            const int qx = q % w, qy = q / w;
            const int nbr[4][2] = {{qx - 1, qy}, {qx + 1, qy}, {qx, qy - 1},
                                   {qx, qy + 1}};
            for (const auto& nb : nbr) {
                if (nb[0] < 0 || nb[0] >= w || nb[1] < 0 || nb[1] >= h)
                    continue;
                const std::int32_t np = nb[1] * w + nb[0];
                if (frame.truth_mask[np] && !res.mask[np]) {
                    res.mask[np] = 1;
                    stack.push_back(np);
                }
            }
        }
    }
    res.prompts_all_invalid = !any_valid;
    return res;
}

}  // namespace trav::sim
