// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posediv/pipeline/records.h"

namespace posediv {

inline constexpr double kDefaultFilterThreshold = 0.1;

struct FilterDecision {
  std::string job_id;
  int step = 0;
  std::string generated_ref;
  std::optional<double> distance;  // absent when no usable estimate
  bool kept = false;
  std::string reason;  // empty when kept
  friend bool operator==(const FilterDecision&, const FilterDecision&) = default;
};

// One decision per generated step, in result order. A step is rejected iff
// the 2D distance between its target and estimated pose exceeds t_filt, or
// it has no usable estimate.
std::vector<FilterDecision> FilterNoisy(std::span<const JobResult> results,
                                        double t_filt = kDefaultFilterThreshold,
                                        const MetricContext& ctx = {});

// Single-step decision rule, shared with tests.
bool KeepAtDistance(double distance, double t_filt);

std::size_t CountKept(std::span<const FilterDecision> decisions);

}  // namespace posediv
