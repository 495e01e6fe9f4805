// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "posediv/novelset/novel_pose_set.h"
#include "posediv/pose/distance.h"

namespace posediv {

// How anchors below the first level are compared with candidates.
enum class DeepRegime {
  k3D,           // set member vs set member, 3D-vs-3D
  kProjected2D,  // both projected through the source camera, 2D-vs-3D
};

// Distance from set member `anchor` to set member `candidate` under `regime`.
// kProjected2D first projects the anchor into the source view, then compares
// it with the candidate in the 2D-vs-3D regime.
double MemberDistance(DeepRegime regime, const SourceView& source,
                      const Pose3D& anchor, const Pose3D& candidate,
                      const MetricContext& ctx);

// Lazily memoized 3D-vs-3D distances between members of one set. Not
// thread-safe; share it between sequential searches over the same set.
class PairwiseDistanceCache {
 public:
  explicit PairwiseDistanceCache(const NovelPoseSet& set);

  double Get(std::size_t anchor, std::size_t candidate);
  const NovelPoseSet& set() const { return *set_; }

 private:
  const NovelPoseSet* set_;
  std::size_t n_;
  bool dense_;
  std::vector<double> table_;  // NaN = not computed yet
};

}  // namespace posediv
