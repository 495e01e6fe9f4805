// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/diffusion/synthetic_poses.h"

#include <array>
#include <numbers>

#include <Eigen/Geometry>

#include "posediv/error.h"

namespace posediv {
namespace {

using Row = std::array<double, 3>;

// Standing, arms hanging slightly away from the body.
constexpr std::array<Row, kNumJoints> kStanding = {{
    {0.0, 0.0, 0.0},       // pelvis
    {0.13, 0.0, 0.0},      // right hip
    {0.13, 0.02, -0.45},   // right knee
    {0.13, 0.0, -0.88},    // right foot
    {-0.13, 0.0, 0.0},     // left hip
    {-0.13, 0.02, -0.45},  // left knee
    {-0.13, 0.0, -0.88},   // left foot
    {0.0, 0.0, 0.23},      // spine
    {0.0, 0.0, 0.48},      // thorax
    {0.0, 0.1, 0.58},      // nose
    {0.0, 0.0, 0.7},       // head
    {-0.17, 0.0, 0.46},    // left shoulder
    {-0.21, 0.0, 0.19},    // left elbow
    {-0.23, 0.03, -0.06},  // left wrist
    {0.17, 0.0, 0.46},     // right shoulder
    {0.21, 0.0, 0.19},     // right elbow
    {0.23, 0.03, -0.06},   // right wrist
}};

constexpr std::array<Row, kNumJoints> kArmsRaised = {{
    {0.0, 0.0, 0.0},
    {0.13, 0.0, 0.0},
    {0.13, 0.02, -0.45},
    {0.13, 0.0, -0.88},
    {-0.13, 0.0, 0.0},
    {-0.13, 0.02, -0.45},
    {-0.13, 0.0, -0.88},
    {0.0, 0.0, 0.23},
    {0.0, 0.0, 0.48},
    {0.0, 0.1, 0.58},
    {0.0, 0.0, 0.7},
    {-0.17, 0.0, 0.46},
    {-0.3, 0.0, 0.7},
    {-0.4, 0.0, 0.94},
    {0.17, 0.0, 0.46},
    {0.3, 0.0, 0.7},
    {0.4, 0.0, 0.94},
}};

// Deep squat with both arms reaching forward.
constexpr std::array<Row, kNumJoints> kSquatReach = {{
    {0.0, 0.0, 0.0},
    {0.13, 0.0, 0.0},
    {0.16, 0.42, -0.1},
    {0.14, 0.1, -0.45},
    {-0.13, 0.0, 0.0},
    {-0.16, 0.42, -0.1},
    {-0.14, 0.1, -0.45},
    {0.0, 0.08, 0.22},
    {0.0, 0.18, 0.45},
    {0.0, 0.3, 0.53},
    {0.0, 0.2, 0.66},
    {-0.17, 0.16, 0.43},
    {-0.17, 0.43, 0.4},
    {-0.15, 0.7, 0.4},
    {0.17, 0.16, 0.43},
    {0.17, 0.43, 0.4},
    {0.15, 0.7, 0.4},
}};

Pose3D FromRows(const std::array<Row, kNumJoints>& rows) {
  Pose3D::Matrix m;
  for (int i = 0; i < kNumJoints; ++i) {
    m.row(i) << rows[i][0], rows[i][1], rows[i][2];
  }
  return Pose3D(m);
}

Eigen::Matrix3d RandomRotation(Rng& rng, double max_angle) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, max_angle);
  Eigen::Vector3d axis(normal(rng), normal(rng), normal(rng));
  if (axis.norm() == 0.0) axis = Eigen::Vector3d::UnitZ();
  return Eigen::AngleAxisd(angle(rng), axis.normalized()).toRotationMatrix();
}

}  // namespace

Pose3D CanonicalPose(CanonicalPoseKind kind) {
  switch (kind) {
    case CanonicalPoseKind::kStanding: return FromRows(kStanding);
    case CanonicalPoseKind::kArmsRaised: return FromRows(kArmsRaised);
    case CanonicalPoseKind::kSquatReach: return FromRows(kSquatReach);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown canonical pose");
}

Pose3D RandomArticulatedPose(Rng& rng, double max_bone_angle,
                             CanonicalPoseKind base) {
  const Pose3D::Matrix& rest = CanonicalPose(base).joints();
  std::array<Eigen::Matrix3d, kNumJoints> rotation;
  Pose3D::Matrix out = Pose3D::Matrix::Zero();
  rotation[0] = RandomRotation(rng, max_bone_angle * 0.3);
  // Parents always precede children in the joint order.
  for (int j = 1; j < kNumJoints; ++j) {
    const int parent = h36m::kParents[j];
    rotation[j] = rotation[parent] * RandomRotation(rng, max_bone_angle);
    const Eigen::Vector3d bone = (rest.row(j) - rest.row(parent)).transpose();
    out.row(j) = out.row(parent) + (rotation[j] * bone).transpose();
  }
  std::uniform_real_distribution<double> yaw(-std::numbers::pi, std::numbers::pi);
  const Eigen::Matrix3d turn =
      Eigen::AngleAxisd(yaw(rng), Eigen::Vector3d::UnitZ()).toRotationMatrix();
  out = (out * turn.transpose()).eval();
  return Pose3D(out);
}

Pose3D RandomUnitPose(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Pose3D::Matrix m;
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = normal(rng);
  return Pose3D(m / m.norm());
}

std::vector<Pose3D> GaussianMixtureDataset(std::span<const Pose3D> modes,
                                           double sigma, int count, Rng& rng) {
  if (modes.empty() || count < 0 || !(sigma >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "bad mixture specification");
  }
  std::uniform_int_distribution<std::size_t> pick(0, modes.size() - 1);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Pose3D> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Pose3D::Matrix m = modes[pick(rng)].joints();
    for (Eigen::Index k = 0; k < m.size(); ++k) m.data()[k] += sigma * normal(rng);
    out.emplace_back(m);
  }
  return out;
}

}  // namespace posediv
