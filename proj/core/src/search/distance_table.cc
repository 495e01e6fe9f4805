// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/search/distance_table.h"

#include <cmath>
#include <limits>

namespace posediv {
namespace {

// 4096^2 doubles = 128 MiB; larger sets recompute instead of caching.
constexpr std::size_t kMaxDenseMembers = 4096;

}  // namespace

double MemberDistance(DeepRegime regime, const SourceView& source,
                      const Pose3D& anchor, const Pose3D& candidate,
                      const MetricContext& ctx) {
  if (regime == DeepRegime::k3D) return PoseDistance(anchor, candidate, ctx);
  const SourceView projected{ProjectIntoView(source, anchor, ctx), source.camera};
  return PoseDistance(projected, candidate, ctx);
}

PairwiseDistanceCache::PairwiseDistanceCache(const NovelPoseSet& set)
    : set_(&set), n_(set.size()), dense_(set.size() <= kMaxDenseMembers) {
  if (dense_) table_.assign(n_ * n_, std::numeric_limits<double>::quiet_NaN());
}

double PairwiseDistanceCache::Get(std::size_t anchor, std::size_t candidate) {
  if (!dense_) {
    return PoseDistance((*set_)[anchor], (*set_)[candidate], set_->metric());
  }
  double& slot = table_[anchor * n_ + candidate];
  if (std::isnan(slot)) {
    slot = PoseDistance((*set_)[anchor], (*set_)[candidate], set_->metric());
  }
  return slot;
}

}  // namespace posediv
