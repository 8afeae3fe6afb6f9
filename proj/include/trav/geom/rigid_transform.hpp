#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace trav::geom {

inline constexpr double kOrthonormalTol = 1e-9;

/// SE(3) pose. Construction validates that the rotation is orthonormal
/// with determinant +1; composition re-orthonormalizes when drift
/// exceeds 1e-12.
class RigidTransform {
public:
    RigidTransform()
        : rotation_(Eigen::Matrix3d::Identity()),
          translation_(Eigen::Vector3d::Zero()) {}

    RigidTransform(const Eigen::Matrix3d& rotation,
                   const Eigen::Vector3d& translation);

    static RigidTransform identity() { return RigidTransform(); }

    const Eigen::Matrix3d& rotation() const { return rotation_; }
    const Eigen::Vector3d& translation() const { return translation_; }

    Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
        return rotation_ * p + translation_;
    }

    RigidTransform inverse() const;

    Eigen::Matrix4d matrix() const;

    static double orthonormal_drift(const Eigen::Matrix3d& r);

private:
    struct Unchecked {};
    RigidTransform(const Eigen::Matrix3d& r, const Eigen::Vector3d& t,
                   Unchecked)
        : rotation_(r), translation_(t) {}

    friend RigidTransform compose(const RigidTransform&,
                                  const RigidTransform&);

    Eigen::Matrix3d rotation_;
    Eigen::Vector3d translation_;
};

/// result applies b first, then a.
RigidTransform compose(const RigidTransform& a, const RigidTransform& b);

}  // namespace trav::geom
