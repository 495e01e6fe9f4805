// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/pipeline/execute.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "posediv/error.h"

namespace posediv {

JobResult ExecuteJob(const TranslationJob& job, ImageTranslator& translator,
                     PoseEstimator& estimator) {
  JobResult result;
  result.job_id = job.job_id;
  result.source_ref = job.source_ref;
  std::string source = job.source_ref;
  for (std::size_t i = 0; i < job.steps.size(); ++i) {
    const TargetStep& target = job.steps[i];
    const int step = static_cast<int>(i) + 1;
    try {
      const TranslateRequest request{job.job_id, step, source, target.pose2d,
                                     target.pose3d, job.seed};
      std::string generated = translator.Translate(request);
      std::optional<Pose2D> estimate = estimator.Estimate(generated);
      result.steps.push_back(
          StepResult{step, target.set_index, generated, target.pose2d, std::move(estimate)});
      source = std::move(generated);
    } catch (const Error& e) {
      result.status = JobStatus::kFailed;
      result.failed_at = step;
      result.failure_message = e.what();
      break;
    }
  }
  return result;
}

std::vector<JobResult> ExecuteManifest(const TranslationManifest& manifest,
                                       ImageTranslator& translator,
                                       PoseEstimator& estimator, int workers) {
  if (workers < 1) throw Error(ErrorCode::kInvalidArgument, "workers must be >= 1");
  const std::size_t n = manifest.jobs.size();
  std::vector<std::optional<JobResult>> slots(n);
  const int threads = static_cast<int>(std::min<std::size_t>(workers, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      slots[i] = ExecuteJob(manifest.jobs[i], translator, estimator);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          slots[i] = ExecuteJob(manifest.jobs[i], translator, estimator);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<JobResult> results;
  results.reserve(n);
  for (auto& s : slots) results.push_back(std::move(*s));
  return results;
}

}  // namespace posediv
