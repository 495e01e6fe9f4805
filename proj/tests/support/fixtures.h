// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "posediv/diffusion/sampler.h"
#include "posediv/novelset/novel_pose_set.h"
#include "posediv/pipeline/records.h"

namespace posediv::testing {

// Independent N(0, 1) coordinates.
Pose3D GaussianPose(Rng& rng);
Pose2D GaussianPose2D(Rng& rng);
// Articulated pose from a random canonical base, with random placement.
Pose3D PlausiblePose(Rng& rng);

// Ground-level-ish camera looking at a random point near the origin, +Z up.
CameraPose RandomCamera(Rng& rng);

// A plausible 3D pose placed at the camera target and projected.
SourceView RandomSourceView(Rng& rng);
std::vector<SourceRecord> RandomSources(int count, Rng& rng);

// Set filled with plausible poses without the diversity check.
NovelPoseSet RandomSet(int n, Rng& rng);

// Two root-centred 2D poses whose normalised distance is `d` up to rounding.
std::pair<Pose2D, Pose2D> PosePairAtDistance(double d, Rng& rng);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace posediv::testing
