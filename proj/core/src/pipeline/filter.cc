// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/pipeline/filter.h"

#include <algorithm>
#include <cmath>

#include "posediv/error.h"

namespace posediv {

bool KeepAtDistance(double distance, double t_filt) { return !(distance > t_filt); }

std::vector<FilterDecision> FilterNoisy(std::span<const JobResult> results,
                                        double t_filt, const MetricContext& ctx) {
  if (!std::isfinite(t_filt) || t_filt < 0.0 || t_filt > 2.0) {
    throw Error(ErrorCode::kRange, "t_filt must lie in [0, 2]");
  }
  std::vector<FilterDecision> decisions;
  for (const JobResult& result : results) {
    for (const StepResult& step : result.steps) {
      FilterDecision d{result.job_id, step.step, step.generated_ref, std::nullopt, false, ""};
      if (!step.estimated2d) {
        d.reason = "no_estimate";
      } else {
        try {
          d.distance = PoseDistance(step.target2d, *step.estimated2d, ctx);
          d.kept = KeepAtDistance(*d.distance, t_filt);
          if (!d.kept) d.reason = "distance_above_threshold";
        } catch (const Error& e) {
          d.reason = "invalid_estimate: ";
          d.reason += ErrorCodeName(e.code());
        }
      }
      decisions.push_back(std::move(d));
    }
  }
  return decisions;
}

std::size_t CountKept(std::span<const FilterDecision> decisions) {
  return static_cast<std::size_t>(std::count_if(
      decisions.begin(), decisions.end(), [](const FilterDecision& d) { return d.kept; }));
}

}  // namespace posediv
