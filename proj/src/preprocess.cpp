#include "svma/preprocess.hpp"

#include "svma/errors.hpp"

namespace svma {

namespace {

template <typename PoseT>
double mean_root_dist(const PoseT& p, int root) {
    const Eigen::Index n = p.rows();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i == root) continue;
        sum += (p.row(i) - p.row(root)).norm();
    }
    return sum / static_cast<double>(n - 1);
}

template <typename PoseT>
PoseT normalize(const PoseT& raw, int root, double target, const char* what) {
    PoseT centered = raw;
    centered.rowwise() -= raw.row(root);
    const double mean = mean_root_dist(centered, root);
    if (!(mean > 0.0))
        throw DegenerateInputError(std::string("degenerate ") + what +
                                   " pose: all joints coincide with the root");
    return centered * (target / mean);
}

} // namespace

double mean_root_distance(const Pose2D& p, int root) { return mean_root_dist(p, root); }
double mean_root_distance(const Pose3D& p, int root) { return mean_root_dist(p, root); }

Pose2D preprocess_2d(const Pose2D& raw, const Skeleton& skeleton, double d) {
    if (raw.rows() != skeleton.joint_count())
        throw SchemaError("2d pose joint count does not match the skeleton");
    return normalize(raw, skeleton.root_index, 1.0 / d, "2d");
}

Pose3D preprocess_3d(const Pose3D& raw, const Skeleton& skeleton) {
    if (raw.rows() != skeleton.joint_count())
        throw SchemaError("3d pose joint count does not match the skeleton");
    return normalize(raw, skeleton.root_index, 1.0, "3d");
}

} // namespace svma
