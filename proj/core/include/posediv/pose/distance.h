// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "posediv/pose/pose.h"
#include "posediv/pose/transforms.h"

namespace posediv {

// Everything the metric needs besides the two poses.
struct MetricContext {
  Skeleton skeleton = Skeleton::Human36M();
  Eigen::Vector3d up = Eigen::Vector3d::UnitZ();  // world up
  ProjectionConfig projection;
};

// A source image's estimated 2D pose together with the camera it was shot
// from.
struct SourceView {
  Pose2D pose;
  CameraPose camera;
};

// sqrt(2 (1 - a.b)) for unit vectors a and b, evaluated as |a - b| (the same
// quantity for unit vectors, without the cancellation near a == b) and
// clamped to [0, 2].
template <int N>
double DistanceBetweenUnitVectors(const Eigen::Matrix<double, N, 1>& a,
                                  const Eigen::Matrix<double, N, 1>& b) {
  const double d = (a - b).norm();
  return d < 0.0 ? 0.0 : (d > 2.0 ? 2.0 : d);
}

// The pose distance. The first argument is the anchor; the second is the
// pose that gets transformed to match it.
//
// 3D vs 3D: `other` is yaw-aligned to the anchor's facing; both poses are
// taken to share a ground-level camera, so no camera transform happens.
double PoseDistance(const Pose3D& anchor, const Pose3D& other,
                    const MetricContext& ctx);

// 2D vs 2D: no transform.
double PoseDistance(const Pose2D& anchor, const Pose2D& other,
                    const MetricContext& ctx);

// 2D vs 3D: `other` is placed at the camera's look-at point, yaw-aligned to
// the facing seen in the 2D anchor, transformed into the camera frame and
// projected. See ProjectIntoView.
double PoseDistance(const SourceView& anchor, const Pose3D& other,
                    const MetricContext& ctx);

// The projected p_j^tr used by the 2D-vs-3D regime.
//
// A 2D anchor has no 3D facing, so facing alignment works in the image: the
// candidate is rotated about world up until its projected neck-to-nose
// vector points the same way as the anchor's. The projected vector is
// a + b cos(t) + c sin(t) in the yaw t, which gives up to two closed-form
// solutions; when none exists, the yaw that best aligns the two directions
// on a 0.5 degree grid is used. Among candidate yaws the one with the
// smaller resulting distance wins.
Pose2D ProjectIntoView(const SourceView& anchor, const Pose3D& other,
                       const MetricContext& ctx);

}  // namespace posediv
