#include "trav/geom/rigid_transform.hpp"

#include <stdexcept>

namespace trav::geom {

double RigidTransform::orthonormal_drift(const Eigen::Matrix3d& r) {
    Eigen::Matrix3d g = r.transpose() * r - Eigen::Matrix3d::Identity();
    return g.cwiseAbs().maxCoeff();
}

RigidTransform::RigidTransform(const Eigen::Matrix3d& rotation,
                               const Eigen::Vector3d& translation)
    : rotation_(rotation), translation_(translation) {
    if (orthonormal_drift(rotation_) > kOrthonormalTol)
        throw std::invalid_argument("rotation is not orthonormal");
    if (std::abs(rotation_.determinant() - 1.0) > kOrthonormalTol)
        throw std::invalid_argument("rotation determinant is not +1");
}

RigidTransform RigidTransform::inverse() const {
    Eigen::Matrix3d rt = rotation_.transpose();
    return RigidTransform(rt, -(rt * translation_), Unchecked{});
}

Eigen::Matrix4d RigidTransform::matrix() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.block<3, 3>(0, 0) = rotation_;
    m.block<3, 1>(0, 3) = translation_;
    return m;
}

RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
    Eigen::Matrix3d r = a.rotation_ * b.rotation_;
    if (RigidTransform::orthonormal_drift(r) > 1e-12) {
        Eigen::Quaterniond q(r);
        r = q.normalized().toRotationMatrix();
    }
    Eigen::Vector3d t = a.rotation_ * b.translation_ + a.translation_;
    return RigidTransform(r, t, RigidTransform::Unchecked{});
}

}  // namespace trav::geom
