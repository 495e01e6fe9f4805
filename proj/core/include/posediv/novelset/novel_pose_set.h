// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "posediv/diffusion/sampler.h"
#include "posediv/error.h"
#include "posediv/pose/distance.h"

namespace posediv {

struct NovelSetConfig {
  int n_pos = 1000;
  double t_sim = 0.24;
  // Consecutive rejections tolerated before giving up.
  int max_attempts = 1000;

  void Validate() const;
  friend bool operator==(const NovelSetConfig&, const NovelSetConfig&) = default;
};

struct SetProvenance {
  std::uint64_t generator_seed = 0;
  std::string schedule_id;
  friend bool operator==(const SetProvenance&, const SetProvenance&) = default;
};

// Diversity-constrained pose collection: no two members closer than t_sim
// under the 3D-vs-3D pose distance.
class NovelPoseSet {
 public:
  explicit NovelPoseSet(NovelSetConfig config, MetricContext metric = {},
                        SetProvenance provenance = {});

  // Accepts iff every member m has PoseDistance(m, candidate) >= t_sim; an
  // empty set always accepts. Appends on acceptance. Also refuses (returns
  // false) once the set is full.
  bool Admit(const Pose3D& candidate);

  // Bypasses the diversity check. For loading persisted sets and for tests
  // that need invariant-violating fixtures.
  void AppendUnchecked(Pose3D pose);

  const std::vector<Pose3D>& poses() const { return poses_; }
  std::size_t size() const { return poses_.size(); }
  bool empty() const { return poses_.empty(); }
  bool full() const { return poses_.size() >= static_cast<std::size_t>(config_.n_pos); }
  const Pose3D& operator[](std::size_t i) const { return poses_[i]; }

  const NovelSetConfig& config() const { return config_; }
  const MetricContext& metric() const { return metric_; }
  const SetProvenance& provenance() const { return provenance_; }
  void set_provenance(SetProvenance p) { provenance_ = std::move(p); }

 private:
  NovelSetConfig config_;
  MetricContext metric_;
  SetProvenance provenance_;
  std::vector<Pose3D> poses_;
};

using PoseGenerator = std::function<Pose3D(Rng&)>;

// Thrown by BuildNovelSet when max_attempts consecutive candidates are
// rejected. Carries everything admitted so far.
class BudgetExhaustedError : public Error {
 public:
  BudgetExhaustedError(const std::string& message, NovelPoseSet partial)
      : Error(ErrorCode::kBudgetExhausted, message), partial_(std::move(partial)) {}

  const NovelPoseSet& partial() const { return partial_; }

 private:
  NovelPoseSet partial_;
};

// Draws candidates from `generator` and admits them until n_pos members are
// in the set.
NovelPoseSet BuildNovelSet(const PoseGenerator& generator,
                           const NovelSetConfig& config, Rng& rng,
                           const MetricContext& metric = {},
                           SetProvenance provenance = {});

// Exact minimum of PoseDistance over unordered pairs (i < j), anchored on the
// lower index. Throws Error(kInvalidArgument) for fewer than two poses.
double MinPairwiseDistance(const NovelPoseSet& set);

}  // namespace posediv
