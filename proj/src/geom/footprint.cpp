#include "trav/geom/footprint.hpp"

#include <stdexcept>

namespace trav::geom {

CameraIntrinsics::CameraIntrinsics(double fx_, double fy_, double cx_,
                                   double cy_, int width_, int height_)
    : fx(fx_), fy(fy_), cx(cx_), cy(cy_), width(width_), height(height_) {
    if (fx <= 0 || fy <= 0)
        throw std::invalid_argument("focal lengths must be positive");
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("image size must be positive");
    if (cx < 0 || cx >= width || cy < 0 || cy >= height)
        throw std::invalid_argument("principal point outside image");
}

std::vector<OdometrySample> select_valid_odometry(
    std::span<const OdometrySample> session, const RigidTransform& frame_pose,
    double frame_timestamp, double d_max, bool future_only) {
    if (d_max <= 0.0) throw std::invalid_argument("d_max must be > 0");
    std::vector<OdometrySample> out;
    const Eigen::Vector3d ref = frame_pose.translation();
    for (const auto& s : session) {
        if (future_only && s.timestamp < frame_timestamp) continue;
        if ((s.pose.translation() - ref).norm() <= d_max) out.push_back(s);
    }
    return out;
}

std::vector<PixelPrompt> project_footprints(
    std::span<const OdometrySample> points, const ProjectionChain& chain,
    const CameraIntrinsics& intrinsics, ProjectionDiagnostics* diag,
    double z_min) {
    const RigidTransform cam_from_lidar = chain.composed();
    std::vector<PixelPrompt> out;
    out.reserve(points.size());
    for (const auto& s : points) {
        const Eigen::Vector3d pc = cam_from_lidar.apply(s.pose.translation());
        if (pc.z() <= z_min) {
            if (diag) ++diag->dropped_behind;
            continue;
        }
        const double u = intrinsics.fx * pc.x() / pc.z() + intrinsics.cx;
        const double v = intrinsics.fy * pc.y() / pc.z() + intrinsics.cy;
        if (!intrinsics.in_frame(u, v)) {
            if (diag) ++diag->dropped_out_of_frame;
            continue;
        }
        out.push_back(PixelPrompt{u, v, s.timestamp});
    }
    return out;
}

}  // namespace trav::geom
