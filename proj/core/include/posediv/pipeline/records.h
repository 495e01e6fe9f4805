// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posediv/pose/distance.h"
#include "posediv/search/progressive_search.h"

namespace posediv {

struct SizeEntry {
  int width = 0;
  int height = 0;
  int LongerSide() const { return width > height ? width : height; }
  friend bool operator==(const SizeEntry&, const SizeEntry&) = default;
};

// One image of the original synthetic dataset.
struct SourceRecord {
  std::string image_ref;
  Pose2D estimated_pose;
  CameraPose camera;
  std::string human_mask_ref;
  SizeEntry size;

  void Validate() const;
  SourceView View() const { return {estimated_pose, camera}; }
};

struct TargetStep {
  std::size_t set_index = 0;
  Pose3D pose3d;
  Pose2D pose2d;  // projected under the source camera
};

// One final target for one source: the translator walks `steps` in order.
struct TranslationJob {
  std::string job_id;
  std::string source_ref;
  std::size_t final_index = 0;
  int sequence_index = 0;  // which of the source's final targets
  std::uint64_t seed = 0;
  double objective = 0.0;
  std::vector<TargetStep> steps;
};

// A source whose planning failed; other sources are unaffected.
struct PlanFailure {
  std::string source_ref;
  std::string code;
  std::string message;
};

struct TranslationManifest {
  std::uint64_t seed = 0;
  std::string config_hash;
  std::string config_json;  // canonical snapshot, embedded verbatim
  std::vector<TranslationJob> jobs;
  std::vector<PlanFailure> failures;
};

enum class JobStatus { kOk, kFailed };

struct StepResult {
  int step = 0;  // 1-based
  std::size_t set_index = 0;
  std::string generated_ref;
  Pose2D target2d;
  std::optional<Pose2D> estimated2d;
};

struct JobResult {
  std::string job_id;
  std::string source_ref;
  JobStatus status = JobStatus::kOk;
  int failed_at = 0;  // 1-based failing step; 0 when ok
  std::string failure_message;
  std::vector<StepResult> steps;
};

}  // namespace posediv
