// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "posediv/pose/pose.h"

namespace posediv {

template <int D>
using PoseVector = Eigen::Matrix<double, kNumJoints * D, 1>;

// Root-centers, flattens row-major and L2-normalizes. Throws
// Error(kDegeneratePose) when every joint coincides with the root.
template <int D>
PoseVector<D> NormalizePoseVector(const Pose<D>& pose, const Skeleton& skeleton);

extern template PoseVector<2> NormalizePoseVector(const Pose2D&, const Skeleton&);
extern template PoseVector<3> NormalizePoseVector(const Pose3D&, const Skeleton&);

// Horizontal component of the neck-to-nose vector, unit length. `up` need
// not be normalized. Throws Error(kUndefinedFacing) when that vector is
// parallel to `up` (or zero).
Eigen::Vector3d FacingDirection(const Pose3D& pose, const Skeleton& skeleton,
                                const Eigen::Vector3d& up);

// Rigid rotation by `angle` radians about `up` through the root joint.
Pose3D RotateAboutUp(const Pose3D& pose, const Skeleton& skeleton,
                     const Eigen::Vector3d& up, double angle);

// Yaw-rotates `pose` about its root so its facing matches `reference`.
Pose3D AlignFacing(const Pose3D& pose, const Pose3D& reference,
                   const Skeleton& skeleton, const Eigen::Vector3d& up);

// Signed yaw (radians) taking facing `from` onto facing `to` about `up`.
double YawBetween(const Eigen::Vector3d& from, const Eigen::Vector3d& to,
                  const Eigen::Vector3d& up);

Pose3D Translate(const Pose3D& pose, const Eigen::Vector3d& offset);

// Rows are the camera's right, up and forward axes in world coordinates.
// When the viewing direction is parallel to the camera's up hint (a nadir
// view), the right axis falls back to the world axis least aligned with it.
Eigen::Matrix3d CameraRotation(const CameraPose& camera);

// World -> camera frame (x right, y up, z forward).
Pose3D TransformToCamera(const Pose3D& pose, const CameraPose& camera);

// Camera frame -> image plane with x right and y down. Weak perspective
// divides every joint by the mean depth, pinhole by the joint's own depth;
// both multiply by the focal length. Throws Error(kProjection) when the
// relevant depth is not strictly positive.
Pose2D ProjectTo2D(const Pose3D& pose_cam, const ProjectionConfig& config);

}  // namespace posediv
