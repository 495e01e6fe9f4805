// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/pose/transforms.h"

#include <cmath>

#include <Eigen/Geometry>

#include "posediv/error.h"

namespace posediv {
namespace {

// Relative threshold below which a horizontal projection counts as zero.
constexpr double kParallelTolerance = 1e-12;

Eigen::Vector3d UnitUp(const Eigen::Vector3d& up) {
  const double n = up.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::kInvalidArgument, "up vector must be nonzero");
  }
  return up / n;
}

}  // namespace

template <int D>
PoseVector<D> NormalizePoseVector(const Pose<D>& pose, const Skeleton& skeleton) {
  typename Pose<D>::Matrix centered = pose.joints();
  centered.rowwise() -= pose.joints().row(skeleton.root);
  PoseVector<D> v = Eigen::Map<const PoseVector<D>>(centered.data());
  const double n = v.norm();
  if (!(n > 0.0)) {
    throw Error(ErrorCode::kDegeneratePose,
                "pose collapses to a point after root-centering");
  }
  return v / n;
}

template PoseVector<2> NormalizePoseVector(const Pose2D&, const Skeleton&);
template PoseVector<3> NormalizePoseVector(const Pose3D&, const Skeleton&);

Eigen::Vector3d FacingDirection(const Pose3D& pose, const Skeleton& skeleton,
                                const Eigen::Vector3d& up) {
  const Eigen::Vector3d u = UnitUp(up);
  const Eigen::Vector3d n = pose.joint(skeleton.nose) - pose.joint(skeleton.neck);
  const Eigen::Vector3d h = n - n.dot(u) * u;
  const double hn = h.norm();
  if (!(hn > kParallelTolerance * n.norm())) {
    throw Error(ErrorCode::kUndefinedFacing,
                "neck-to-nose vector is parallel to up; facing undefined");
  }
  return h / hn;
}

double YawBetween(const Eigen::Vector3d& from, const Eigen::Vector3d& to,
                  const Eigen::Vector3d& up) {
  const Eigen::Vector3d u = UnitUp(up);
  return std::atan2(from.cross(to).dot(u), from.dot(to));
}

Pose3D RotateAboutUp(const Pose3D& pose, const Skeleton& skeleton,
                     const Eigen::Vector3d& up, double angle) {
  const Eigen::Matrix3d r = Eigen::AngleAxisd(angle, UnitUp(up)).toRotationMatrix();
  const Eigen::RowVector3d root = pose.joints().row(skeleton.root);
  Pose3D::Matrix out = pose.joints();
  out.rowwise() -= root;
  out = (out * r.transpose()).eval();
  out.rowwise() += root;
  return Pose3D(out);
}

Pose3D AlignFacing(const Pose3D& pose, const Pose3D& reference,
                   const Skeleton& skeleton, const Eigen::Vector3d& up) {
  const Eigen::Vector3d from = FacingDirection(pose, skeleton, up);
  const Eigen::Vector3d to = FacingDirection(reference, skeleton, up);
  return RotateAboutUp(pose, skeleton, up, YawBetween(from, to, up));
}

Pose3D Translate(const Pose3D& pose, const Eigen::Vector3d& offset) {
  Pose3D::Matrix out = pose.joints();
  out.rowwise() += offset.transpose();
  return Pose3D(out);
}

Eigen::Matrix3d CameraRotation(const CameraPose& camera) {
  camera.Validate();
  const Eigen::Vector3d forward = (camera.look_at - camera.position).normalized();
  const Eigen::Vector3d up_hint = camera.up.normalized();
  Eigen::Vector3d right = forward.cross(up_hint);
  if (!(right.norm() > kParallelTolerance)) {
    Eigen::Index axis = 0;
    forward.cwiseAbs().minCoeff(&axis);
    right = forward.cross(Eigen::Vector3d::Unit(axis));
  }
  right.normalize();
  const Eigen::Vector3d cam_up = right.cross(forward);
  Eigen::Matrix3d r;
  r.row(0) = right.transpose();
  r.row(1) = cam_up.transpose();
  r.row(2) = forward.transpose();
  return r;
}

Pose3D TransformToCamera(const Pose3D& pose, const CameraPose& camera) {
  const Eigen::Matrix3d r = CameraRotation(camera);
  Pose3D::Matrix out = pose.joints();
  out.rowwise() -= camera.position.transpose();
  out = (out * r.transpose()).eval();
  return Pose3D(out);
}

Pose2D ProjectTo2D(const Pose3D& pose_cam, const ProjectionConfig& config) {
  config.Validate();
  const auto& j = pose_cam.joints();
  Pose2D::Matrix out;
  if (config.mode == ProjectionMode::kWeakPerspective) {
    const double depth = j.col(2).mean();
    if (!(depth > 0.0)) {
      throw Error(ErrorCode::kProjection,
                  "weak perspective needs a positive mean depth");
    }
    const double s = config.focal_length / depth;
    out.col(0) = s * j.col(0);
    out.col(1) = -s * j.col(1);
  } else {
    for (int i = 0; i < kNumJoints; ++i) {
      const double z = j(i, 2);
      if (!(z > 0.0)) {
        throw Error(ErrorCode::kProjection,
                    "pinhole projection: joint at or behind the camera plane");
      }
      out(i, 0) = config.focal_length * j(i, 0) / z;
      out(i, 1) = -config.focal_length * j(i, 1) / z;
    }
  }
  return Pose2D(out);
}

}  // namespace posediv
