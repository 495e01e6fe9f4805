// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posediv/novelset/novel_pose_set.h"
#include "posediv/pipeline/filter.h"

namespace posediv {

inline constexpr int kHistogramBuckets = 20;  // width 0.1 over [0, 2]

struct RunStats {
  std::size_t generated = 0;
  std::size_t kept = 0;
  std::size_t filtered = 0;
  std::size_t set_size = 0;
  std::optional<double> min_pairwise;
  std::array<std::size_t, kHistogramBuckets> histogram{};
  std::vector<std::pair<std::string, double>> timings;  // stage, seconds

  // Throws Error(kInvalidArgument) unless kept + filtered == generated.
  void Validate() const;
};

// Bucket index of a distance in [0, 2]; 2.0 lands in the last bucket.
int HistogramBucket(double distance);

void AddFilterCounts(std::span<const FilterDecision> decisions, RunStats* stats);
// Exhaustive pairwise distances of the set (anchor = lower index).
void AddSetDiversity(const NovelPoseSet& set, RunStats* stats);

// Comma-delimited "kind,name,lo,hi,value" rows under a schema comment.
void WriteStatsCsv(std::ostream& out, const RunStats& stats);

// Timing log: one "stage,seconds" row per line.
void AppendTiming(const std::string& path, const std::string& stage, double seconds);
std::vector<std::pair<std::string, double>> ReadTimings(std::istream& in);

}  // namespace posediv
