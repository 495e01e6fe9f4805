// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/novelset/novel_pose_set.h"

#include <algorithm>
#include <limits>

namespace posediv {

void NovelSetConfig::Validate() const {
  if (n_pos < 1) throw Error(ErrorCode::kRange, "n_pos must be >= 1");
  if (!(t_sim > 0.0 && t_sim < 2.0)) {
    throw Error(ErrorCode::kRange, "t_sim must lie in (0, 2)");
  }
  if (max_attempts < 1) {
    throw Error(ErrorCode::kRange, "max_attempts must be >= 1");
  }
}

NovelPoseSet::NovelPoseSet(NovelSetConfig config, MetricContext metric,
                           SetProvenance provenance)
    : config_(config), metric_(std::move(metric)), provenance_(std::move(provenance)) {
  config_.Validate();
}

bool NovelPoseSet::Admit(const Pose3D& candidate) {
  if (full()) return false;
  // Surfaces a degenerate candidate even when the set is still empty.
  NormalizePoseVector(candidate, metric_.skeleton);
  for (const Pose3D& member : poses_) {
    if (PoseDistance(member, candidate, metric_) < config_.t_sim) return false;
  }
  poses_.push_back(candidate);
  return true;
}

void NovelPoseSet::AppendUnchecked(Pose3D pose) { poses_.push_back(std::move(pose)); }

NovelPoseSet BuildNovelSet(const PoseGenerator& generator,
                           const NovelSetConfig& config, Rng& rng,
                           const MetricContext& metric, SetProvenance provenance) {
  NovelPoseSet set(config, metric, std::move(provenance));
  int rejections = 0;
  while (!set.full()) {
    if (set.Admit(generator(rng))) {
      rejections = 0;
      continue;
    }
    if (++rejections >= config.max_attempts) {
      throw BudgetExhaustedError(
          "novel set stalled at " + std::to_string(set.size()) + " of " +
              std::to_string(config.n_pos) + " poses after " +
              std::to_string(rejections) + " consecutive rejections",
          std::move(set));
    }
  }
  return set;
}

double MinPairwiseDistance(const NovelPoseSet& set) {
  if (set.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "min pairwise distance needs at least two poses");
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      best = std::min(best, PoseDistance(set[i], set[j], set.metric()));
    }
  }
  return best;
}

}  // namespace posediv
