#pragma once

#include <span>
#include <vector>

#include "trav/geom/camera.hpp"
#include "trav/geom/rigid_transform.hpp"

namespace trav::geom {

struct OdometrySample {
    double timestamp = 0.0;
    RigidTransform pose;  // odom frame -> lidar frame
};

struct PixelPrompt {
    double u = 0.0, v = 0.0;
    double source_timestamp = 0.0;
};

/// Calibration chain mapping lidar-frame points into the camera frame:
/// camera <- foot center <- base <- lidar.
struct ProjectionChain {
    RigidTransform cam_from_foot;
    RigidTransform foot_from_base;
    RigidTransform base_from_lidar;

    RigidTransform composed() const {
        return compose(cam_from_foot, compose(foot_from_base, base_from_lidar));
    }

    /// Full four-factor chain for points expressed in the odom frame.
    RigidTransform composed_with(const RigidTransform& lidar_from_odom) const {
        return compose(composed(), lidar_from_odom);
    }
};

struct ProjectionDiagnostics {
    int dropped_behind = 0;
    int dropped_out_of_frame = 0;
};

inline constexpr double kDefaultZMin = 0.05;

/// Keeps samples within d_max of the frame pose whose timestamp is not
/// earlier than the frame's (the robot walks through future footprints).
/// Set future_only = false for a symmetric window. Ordering preserved.
std::vector<OdometrySample> select_valid_odometry(
    std::span<const OdometrySample> session, const RigidTransform& frame_pose,
    double frame_timestamp, double d_max, bool future_only = true);

/// Maps each sample's position through the calibration chain and pinhole
/// projection. Points behind the camera (z <= z_min) or outside the image
/// are dropped and counted in diag.
std::vector<PixelPrompt> project_footprints(
    std::span<const OdometrySample> points, const ProjectionChain& chain,
    const CameraIntrinsics& intrinsics, ProjectionDiagnostics* diag = nullptr,
    double z_min = kDefaultZMin);

}  // namespace trav::geom
