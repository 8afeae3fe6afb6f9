#pragma once

namespace trav::geom {

/// Pinhole intrinsics; validated at construction.
struct CameraIntrinsics {
    double fx = 0, fy = 0;
    double cx = 0, cy = 0;
    int width = 0, height = 0;

    CameraIntrinsics() = default;
    CameraIntrinsics(double fx, double fy, double cx, double cy, int width,
                     int height);

    bool in_frame(double u, double v) const {
        return u >= 0.0 && u < width && v >= 0.0 && v < height;
    }
};

}  // namespace trav::geom
