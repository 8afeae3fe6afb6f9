#include "trav/sim/generator.hpp"

#include <stdexcept>

#include "trav/core/parallel.hpp"
#include "trav/core/rng.hpp"

namespace trav::sim {

namespace {

constexpr std::uint64_t kPromptStream = 0x70726f6d;  // prompt draws

Frame make_frame(const Scenario& sc, int gi, std::uint64_t seed,
                 bool parallel) {
    const Block& block = sc.block_for_frame(gi);
    const int w = sc.width, h = sc.height, d = sc.feature_dim;
    const int nb = static_cast<int>(block.band_classes.size());
    if (nb < 1) throw std::invalid_argument("block has no bands");

    Frame f;
    f.width = w;
    f.height = h;
    f.feature_dim = d;
    f.scene_id = block.scene_id;
    f.index = gi;
    f.features.resize(static_cast<std::size_t>(w) * h * d);
    f.truth_mask.resize(static_cast<std::size_t>(w) * h);

    const std::uint64_t frame_key = static_cast<std::uint64_t>(gi);
    auto pixel_body = [&](std::int64_t p) {
        const int y = static_cast<int>(p / w);
        const int band = y * nb / h;
        const TerrainClass& tc = sc.classes[block.band_classes[band]];
        f.truth_mask[p] = tc.traversable ? 1 : 0;
        float* row = f.features.data() + static_cast<std::size_t>(p) * d;
        for (int k = 0; k < d; ++k) {
            const double n = core::counter_normal(
                seed, frame_key, static_cast<std::uint64_t>(p) * d + k);
            row[k] =
                static_cast<float>(tc.feature_mean[k] + tc.feature_std[k] * n);
        }
    };
    const std::int64_t npix = static_cast<std::int64_t>(w) * h;
    if (parallel) {
        core::parallel_for(npix, pixel_body);
    } else {
        for (std::int64_t p = 0; p < npix; ++p) pixel_body(p);
    }

    // Prompt sampling is cheap and stays serial in both variants.
    std::vector<std::int64_t> trav_pixels;
    for (std::int64_t p = 0; p < npix; ++p)
        if (f.truth_mask[p]) trav_pixels.push_back(p);
    if (!trav_pixels.empty()) {
        core::Rng rng = core::Rng::derive(seed, kPromptStream, frame_key);
        std::size_t count =
            sc.prompt_min +
            rng.uniform_index(static_cast<std::size_t>(sc.prompt_max -
                                                       sc.prompt_min + 1));
        count = std::min(count, trav_pixels.size());
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t j =
                i + rng.uniform_index(trav_pixels.size() - i);
            std::swap(trav_pixels[i], trav_pixels[j]);
            const std::int64_t p = trav_pixels[i];
            f.prompts.push_back(geom::PixelPrompt{
                static_cast<double>(p % w) + 0.5,
                static_cast<double>(p / w) + 0.5, static_cast<double>(gi)});
        }
    }
    return f;
}

}  // namespace

Frame generate_frame(const Scenario& scenario, int global_index,
                     std::uint64_t seed) {
    return make_frame(scenario, global_index, seed, true);
}

Frame generate_frame_serial(const Scenario& scenario, int global_index,
                            std::uint64_t seed) {
    return make_frame(scenario, global_index, seed, false);
}

}  // namespace trav::sim
