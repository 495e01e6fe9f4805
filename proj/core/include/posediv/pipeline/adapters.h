// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "posediv/pipeline/mask.h"
#include "posediv/pipeline/records.h"

namespace posediv {

struct TranslateRequest {
  std::string job_id;
  int step = 0;  // 1-based
  std::string source_image_ref;
  const Pose2D& target2d;
  const Pose3D& target3d;
  std::uint64_t seed = 0;
};

// Pose-guided image translator. Returns the generated image's ref; throws
// Error(kAdapter) on failure. Implementations used with more than one worker
// must be thread-safe.
class ImageTranslator {
 public:
  virtual ~ImageTranslator() = default;
  virtual std::string Translate(const TranslateRequest& request) = 0;
};

// 2D pose estimator run on generated images. nullopt = no pose found.
class PoseEstimator {
 public:
  virtual ~PoseEstimator() = default;
  virtual std::optional<Pose2D> Estimate(const std::string& image_ref) = 0;
};

struct MockOptions {
  // Isotropic Gaussian noise on the target pose, in units of the target's
  // RMS joint distance from the root.
  double noise = 0.0;
  // 1-based step at which every job fails; 0 disables.
  int fail_at_step = 0;
  // When set, each generated image is written here as a PPM silhouette of
  // the estimated pose and its path becomes the generated ref.
  std::optional<std::filesystem::path> render_dir;
  int render_width = 96;
  int render_height = 128;
  Rgb background = kMidGray;
  Rgb foreground = {200, 60, 40};
};

// Deterministic stand-in for the neural translator and the estimator: the
// "generated image" is a record of the target pose plus noise, and
// estimating it returns that noisy pose.
class MockStudio : public ImageTranslator, public PoseEstimator {
 public:
  explicit MockStudio(MockOptions options = {});

  std::string Translate(const TranslateRequest& request) override;
  std::optional<Pose2D> Estimate(const std::string& image_ref) override;

 private:
  MockOptions options_;
  std::mutex mu_;
  std::map<std::string, Pose2D> generated_;
};

// External process adapter. For each step it runs
//
//   <command> <source_ref> <target_pose_file> <estimated_pose_file> <seed>
//
// where target_pose_file is a one-pose 2D pose document. The process prints
// the generated image ref on the first line of stdout and writes the
// estimated 2D pose document (or nothing, if no pose was found). A nonzero
// exit status fails the step.
class CommandAdapter : public ImageTranslator, public PoseEstimator {
 public:
  CommandAdapter(std::string command, std::filesystem::path work_dir);

  std::string Translate(const TranslateRequest& request) override;
  std::optional<Pose2D> Estimate(const std::string& image_ref) override;

 private:
  std::string command_;
  std::filesystem::path work_dir_;
  std::mutex mu_;
  std::map<std::string, std::optional<Pose2D>> estimates_;
};

}  // namespace posediv
