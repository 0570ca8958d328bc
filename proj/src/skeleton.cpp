#include "svma/skeleton.hpp"

#include "svma/errors.hpp"

#include <set>

namespace svma {

int Skeleton::joint_index(const std::string& name) const {
    for (std::size_t i = 0; i < joint_names.size(); ++i) {
        if (joint_names[i] == name) return static_cast<int>(i);
    }
    return -1;
}

void Skeleton::validate() const {
    const int n = joint_count();
    if (n == 0) throw ConfigError("skeleton has no joints");

    std::set<std::string> seen(joint_names.begin(), joint_names.end());
    if (static_cast<int>(seen.size()) != n)
        throw ConfigError("skeleton has duplicate joint names");

    auto check_joint = [n](int idx, const char* what) {
        if (idx < 0 || idx >= n)
            throw ConfigError(std::string(what) + " index out of range");
    };
    check_joint(root_index, "root joint");

    for (const auto& [parent, child] : bone_edges) {
        check_joint(parent, "bone parent");
        check_joint(child, "bone child");
        if (parent == child) throw ConfigError("bone connects a joint to itself");
    }

    const int b = bone_count();
    for (const auto& [left, right] : symmetric_pairs) {
        if (left < 0 || left >= b || right < 0 || right >= b)
            throw ConfigError("symmetric pair references an unknown bone");
        if (left == right)
            throw ConfigError("symmetric pair must reference two distinct bones");
    }

    const int ori[4] = {orientation.nose, orientation.neck,
                        orientation.left_shoulder, orientation.right_shoulder};
    std::set<int> distinct;
    for (int idx : ori) {
        check_joint(idx, "orientation joint");
        distinct.insert(idx);
    }
    if (distinct.size() != 4)
        throw ConfigError("orientation joints must be four distinct joints");
}

Skeleton Skeleton::canonical16() {
    Skeleton s;
    s.joint_names = {
        "hip",        // 0, root
        "spine",      // 1
        "neck",       // 2
        "nose",       // 3
        "l_shoulder", // 4
        "l_elbow",    // 5
        "l_wrist",    // 6
        "r_shoulder", // 7
        "r_elbow",    // 8
        "r_wrist",    // 9
        "l_hip",      // 10
        "l_knee",     // 11
        "l_ankle",    // 12
        "r_hip",      // 13
        "r_knee",     // 14
        "r_ankle",    // 15
    };
    s.root_index = 0;
    s.bone_edges = {
        {0, 1},   // 0  hip->spine
        {1, 2},   // 1  spine->neck
        {2, 3},   // 2  neck->nose
        {2, 4},   // 3  neck->l_shoulder
        {4, 5},   // 4  l_shoulder->l_elbow
        {5, 6},   // 5  l_elbow->l_wrist
        {2, 7},   // 6  neck->r_shoulder
        {7, 8},   // 7  r_shoulder->r_elbow
        {8, 9},   // 8  r_elbow->r_wrist
        {0, 10},  // 9  hip->l_hip
        {10, 11}, // 10 l_hip->l_knee
        {11, 12}, // 11 l_knee->l_ankle
        {0, 13},  // 12 hip->r_hip
        {13, 14}, // 13 r_hip->r_knee
        {14, 15}, // 14 r_knee->r_ankle
    };
    s.symmetric_pairs = {
        {3, 6},   // clavicles
        {4, 7},   // upper arms
        {5, 8},   // forearms
        {9, 12},  // pelvis halves
        {10, 13}, // thighs
        {11, 14}, // shins
    };
    s.orientation.nose = 3;
    s.orientation.neck = 2;
    s.orientation.left_shoulder = 4;
    s.orientation.right_shoulder = 7;
    return s;
}

} // namespace svma
