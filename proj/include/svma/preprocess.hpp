#pragma once

#include "svma/skeleton.hpp"
#include "svma/types.hpp"

namespace svma {

/// Root-center the pose and scale it uniformly so the mean distance from
/// the non-root joints to the root is 1/d. Throws DegenerateInputError
/// when all joints coincide with the root.
Pose2D preprocess_2d(const Pose2D& raw, const Skeleton& skeleton, double d);

/// Same normalization for 3D poses with target mean distance 1. Used only
/// on ground truth in evaluation paths, never during training.
Pose3D preprocess_3d(const Pose3D& raw, const Skeleton& skeleton);

/// Mean Euclidean distance from non-root joints to the root.
double mean_root_distance(const Pose2D& p, int root);
double mean_root_distance(const Pose3D& p, int root);

} // namespace svma
