#pragma once

#include "svma/types.hpp"

#include <Eigen/Core>

namespace svma {

/// Rotation about the camera y-axis. matrix() is the row-vector form:
/// a pose row p is rotated as p * matrix().
struct RotationY {
    double theta = 0.0;

    Eigen::Matrix3d matrix() const {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        Eigen::Matrix3d m;
        m << c, 0, -s,
             0, 1, 0,
             s, 0, c;
        return m;
    }
};

/// Reconstruct a 3D pose from a preprocessed 2D pose and per-joint depth
/// offsets: Z_i = max(d + D_i, min_depth), X_i = x_i Z_i, Y_i = y_i Z_i.
/// Depths that hit the clamp are counted into *clamp_count when given.
Pose3D lift_from_depth(const Pose2D& x2d, const Eigen::VectorXd& depth_offsets,
                       double d, double min_depth = 1.0,
                       long* clamp_count = nullptr);

/// Unit-focal-length perspective projection x_i = X_i/Z_i, y_i = Y_i/Z_i.
/// Throws DomainError for any nonpositive depth.
Pose2D perspective_project(const Pose3D& p);

/// Rotate a pose about the pivot (0,0,d) by theta around the y-axis.
Pose3D rotate_about_pivot(const Pose3D& p, RotationY rot, double d);

/// Weak-perspective projection of the absolute pose: each 2D joint is
/// K * (X_i, Y_i, Z_i).
Pose2D weak_project(const Pose3D& p, const CameraWP& cam);

/// Scale of a weak-perspective camera, sqrt(trace(K K^T)/2). Throws
/// DomainError for the zero matrix.
double camera_scale(const CameraWP& cam);

} // namespace svma
