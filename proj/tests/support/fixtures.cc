// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "support/fixtures.h"

#include <atomic>
#include <numbers>
#include <random>

#include <unistd.h>

#include "posediv/diffusion/synthetic_poses.h"
#include "posediv/pose/transforms.h"

namespace posediv::testing {

Pose3D GaussianPose(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Pose3D::Matrix m;
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = n(rng);
  return Pose3D(m);
}

Pose2D GaussianPose2D(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Pose2D::Matrix m;
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = n(rng);
  return Pose2D(m);
}

Pose3D PlausiblePose(Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_real_distribution<double> offset(-3.0, 3.0);
  const Pose3D p = RandomArticulatedPose(rng, 0.6, static_cast<CanonicalPoseKind>(kind(rng)));
  return Translate(p, Eigen::Vector3d(offset(rng), offset(rng), offset(rng)));
}

CameraPose RandomCamera(Rng& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> az(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> el(0.05, 1.0);
  std::uniform_real_distribution<double> radius(3.0, 10.0);
  CameraPose c;
  c.look_at = Eigen::Vector3d(unit(rng), unit(rng), unit(rng));
  const double a = az(rng), e = el(rng), r = radius(rng);
  c.position = c.look_at + r * Eigen::Vector3d(std::cos(e) * std::cos(a),
                                               std::cos(e) * std::sin(a), std::sin(e));
  c.up = Eigen::Vector3d::UnitZ();
  return c;
}

SourceView RandomSourceView(Rng& rng) {
  const CameraPose camera = RandomCamera(rng);
  std::uniform_int_distribution<int> kind(0, 2);
  Pose3D p = RandomArticulatedPose(rng, 0.6, static_cast<CanonicalPoseKind>(kind(rng)));
  p = Translate(p, camera.look_at - p.joint(0));
  return {ProjectTo2D(TransformToCamera(p, camera), ProjectionConfig{}), camera};
}

std::vector<SourceRecord> RandomSources(int count, Rng& rng) {
  std::vector<SourceRecord> out;
  for (int i = 0; i < count; ++i) {
    const SourceView v = RandomSourceView(rng);
    out.push_back(SourceRecord{"img" + std::to_string(i) + ".png", v.pose, v.camera,
                               "mask" + std::to_string(i) + ".pbm", {40 + i, 90 + 2 * i}});
  }
  return out;
}

NovelPoseSet RandomSet(int n, Rng& rng) {
  NovelPoseSet set(NovelSetConfig{n, 0.24, 1000});
  for (int i = 0; i < n; ++i) set.AppendUnchecked(PlausiblePose(rng));
  return set;
}

// e = cos(theta) u + sin(theta) w with u, w orthonormal and root rows zero.
std::pair<Pose2D, Pose2D> PosePairAtDistance(double d, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Pose2D::Matrix u;
  Pose2D::Matrix w;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    u.data()[i] = n(rng);
    w.data()[i] = n(rng);
  }
  u.row(0).setZero();
  w.row(0).setZero();
  u /= u.norm();
  w -= (w.cwiseProduct(u)).sum() * u;
  w /= w.norm();
  const double theta = 2.0 * std::asin(d / 2.0);
  return {Pose2D(u), Pose2D(std::cos(theta) * u + std::sin(theta) * w)};
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("posediv_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace posediv::testing
