// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "posediv/pose/skeleton.h"

namespace posediv {

// K keypoints in D dimensions. Construction validates: every coordinate
// finite and the pose not identically zero.
template <int D>
class Pose {
 public:
  static constexpr int kDim = D;
  using Matrix = Eigen::Matrix<double, kNumJoints, D, Eigen::RowMajor>;
  using Point = Eigen::Matrix<double, D, 1>;

  explicit Pose(const Matrix& joints);

  const Matrix& joints() const { return joints_; }
  Point joint(int i) const { return joints_.row(i).transpose(); }

  friend bool operator==(const Pose& a, const Pose& b) {
    return a.joints_ == b.joints_;
  }

 private:
  Matrix joints_;
};

using Pose3D = Pose<3>;
using Pose2D = Pose<2>;

extern template class Pose<2>;
extern template class Pose<3>;

// Extrinsics of a camera looking at a subject. The camera frame is
// right / up / forward.
struct CameraPose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Vector3d look_at = -Eigen::Vector3d::UnitZ();
  Eigen::Vector3d up = Eigen::Vector3d::UnitY();

  void Validate() const;
  friend bool operator==(const CameraPose&, const CameraPose&) = default;
};

enum class ProjectionMode { kWeakPerspective, kPinhole };

struct ProjectionConfig {
  ProjectionMode mode = ProjectionMode::kWeakPerspective;
  double focal_length = 1.0;

  void Validate() const;
  friend bool operator==(const ProjectionConfig&,
                         const ProjectionConfig&) = default;
};

}  // namespace posediv
