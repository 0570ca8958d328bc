#pragma once

#include <Eigen/Core>

namespace svma {

/// One pose = one row per joint. 2D coordinates are image-plane units,
/// 3D coordinates are camera-centered (camera at the origin, skeleton
/// near depth d).
using Pose2D = Eigen::Matrix<double, Eigen::Dynamic, 2>;
using Pose3D = Eigen::Matrix<double, Eigen::Dynamic, 3>;

/// Weak-perspective camera: a 2x3 projection matrix.
struct CameraWP {
    Eigen::Matrix<double, 2, 3> K;

    static CameraWP ideal(double scale) {
        CameraWP c;
        c.K << scale, 0, 0, 0, scale, 0;
        return c;
    }
};

/// Flatten a pose to the interleaved vector layout (x1,y1,x2,y2,...) used
/// as network input and in the loss definitions.
inline Eigen::VectorXd flatten(const Pose2D& p) {
    Eigen::VectorXd v(2 * p.rows());
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        v[2 * i] = p(i, 0);
        v[2 * i + 1] = p(i, 1);
    }
    return v;
}

inline Eigen::VectorXd flatten(const Pose3D& p) {
    Eigen::VectorXd v(3 * p.rows());
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        v[3 * i] = p(i, 0);
        v[3 * i + 1] = p(i, 1);
        v[3 * i + 2] = p(i, 2);
    }
    return v;
}

inline Pose2D unflatten2d(const Eigen::VectorXd& v) {
    Pose2D p(v.size() / 2, 2);
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        p(i, 0) = v[2 * i];
        p(i, 1) = v[2 * i + 1];
    }
    return p;
}

inline Pose3D unflatten3d(const Eigen::VectorXd& v) {
    Pose3D p(v.size() / 3, 3);
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        p(i, 0) = v[3 * i];
        p(i, 1) = v[3 * i + 1];
        p(i, 2) = v[3 * i + 2];
    }
    return p;
}

} // namespace svma
