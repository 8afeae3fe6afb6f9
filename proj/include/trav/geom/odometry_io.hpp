#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "trav/geom/footprint.hpp"

namespace trav::geom {

// Plain-text session format, one sample per line:
//   timestamp r00 r01 r02 r10 r11 r12 r20 r21 r22 t0 t1 t2
// '.' decimal separator, rotation row-major. Timestamps must be strictly
// increasing.
std::vector<OdometrySample> load_odometry(const std::filesystem::path& path);

void save_odometry(const std::filesystem::path& path,
                   std::span<const OdometrySample> samples);

}  // namespace trav::geom
