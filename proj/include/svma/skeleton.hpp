#pragma once

#include <string>
#include <utility>
#include <vector>

namespace svma {

/// Indices of the four joints the face/shoulder orientation constraint
/// is computed from.
struct OrientationJoints {
    int nose = -1;
    int neck = -1;
    int left_shoulder = -1;
    int right_shoulder = -1;
};

/// Named-joint topology. Bones form a tree rooted at the hip; symmetric
/// pairs reference bone indices (left bone, right bone).
struct Skeleton {
    std::vector<std::string> joint_names;
    int root_index = 0;
    std::vector<std::pair<int, int>> bone_edges;      // (parent, child)
    std::vector<std::pair<int, int>> symmetric_pairs; // (bone idx, bone idx)
    OrientationJoints orientation;

    int joint_count() const { return static_cast<int>(joint_names.size()); }
    int bone_count() const { return static_cast<int>(bone_edges.size()); }

    int joint_index(const std::string& name) const;

    /// Throws ConfigError if any invariant is violated: duplicate names,
    /// indices out of range, a symmetric pair referencing the same bone,
    /// or orientation joints that are not four distinct valid indices.
    void validate() const;

    /// The canonical 16-joint skeleton: hip (root), spine, neck, nose,
    /// shoulders/elbows/wrists and hips/knees/ankles on both sides.
    static Skeleton canonical16();
};

} // namespace svma
