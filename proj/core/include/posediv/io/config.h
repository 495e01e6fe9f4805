// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "posediv/diffusion/schedule.h"
#include "posediv/diffusion/synthetic_poses.h"
#include "posediv/diffusion/training.h"
#include "posediv/novelset/novel_pose_set.h"
#include "posediv/pipeline/adapters.h"
#include "posediv/pipeline/placement.h"
#include "posediv/search/progressive_search.h"

namespace posediv {

enum class GeneratorKind { kArticulated, kDenoiser, kPool };
enum class AdapterKind { kMock, kCommand };

// Every stage reads the same flat config file. All keys are optional; a
// missing key takes the default below.
struct PipelineConfig {
  std::uint64_t seed = 0;

  // novel pose set
  int n_pos = 1000;
  double t_sim = 0.24;
  int max_attempts = 1000;
  GeneratorKind generator = GeneratorKind::kArticulated;
  double max_bone_angle = 0.6;

  // search
  int k = 2;
  int n_max = 3;
  int finals_per_source = 5;
  DeepRegime deep_regime = DeepRegime::k3D;
  bool prune = true;

  // filter
  double t_filt = 0.1;

  // diffusion
  int schedule_steps = 1000;
  double beta_min = 1e-4;
  double beta_max = 2e-2;
  int denoiser_hidden = 64;
  int train_iterations = 20000;
  int train_batch = 64;
  double learning_rate = 1e-3;
  int train_samples = 4096;
  double train_sigma = 0.05;
  std::vector<CanonicalPoseKind> train_modes = {
      CanonicalPoseKind::kStanding, CanonicalPoseKind::kArmsRaised,
      CanonicalPoseKind::kSquatReach};

  // metric
  Eigen::Vector3d world_up = Eigen::Vector3d::UnitZ();
  ProjectionMode projection = ProjectionMode::kWeakPerspective;
  double focal_length = 1.0;

  // adapters
  AdapterKind adapter = AdapterKind::kMock;
  double mock_noise = 0.0;
  int mock_fail_at_step = 0;
  std::string adapter_command;
  int workers = 1;
  int render_width = 96;
  int render_height = 128;

  // compose
  Rgb mono_color = kMidGray;
  double mask_tolerance = 0.0;
  int canvas_width = 640;
  int canvas_height = 480;
  int placement_max_tries = 100;
  LowerRule lower_rule = LowerRule::kBottomEdge;
  bool occlusion = true;

  // Throws Error(kRange) naming the first offending field.
  void Validate() const;

  NovelSetConfig NovelSet() const;
  SearchConfig Search() const;
  NoiseSchedule Schedule() const;
  TrainingConfig Training() const;
  MetricContext Metric() const;
  PlacementOptions Placement() const;
  MockOptions Mock() const;

  // Fully resolved snapshot (every key present) and its hash.
  nlohmann::json ToJson() const;
  std::string Hash() const;
};

// Throws Error(kParse) on malformed JSON, a non-object document, an unknown
// key or a wrongly typed value; Error(kRange) on an out-of-range value.
PipelineConfig ConfigFromJson(const nlohmann::json& j);
// Empty (or whitespace-only) text yields the defaults.
PipelineConfig ParseConfig(const std::string& text);
PipelineConfig LoadConfig(const std::filesystem::path& path);

std::string ToString(CanonicalPoseKind kind);
CanonicalPoseKind CanonicalPoseKindFromString(const std::string& s);

}  // namespace posediv
