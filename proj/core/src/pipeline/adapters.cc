// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/pipeline/adapters.h"

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <random>

#include "posediv/error.h"
#include "posediv/io/formats.h"
#include "posediv/pipeline/raster.h"
#include "posediv/pipeline/seeding.h"

namespace posediv {
namespace {

std::string SafeFileStem(const std::string& job_id, int step) {
  std::string stem;
  for (char c : job_id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '_';
    stem.push_back(ok ? c : '_');
  }
  return stem + "_step" + std::to_string(step);
}

std::string ShellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out.push_back(c);
    }
  }
  return out + "'";
}

// RMS distance of the joints from the root.
double RootRms(const Pose2D& pose) {
  const auto& j = pose.joints();
  const Eigen::RowVector2d root = j.row(h36m::kPelvis);
  double sum = 0.0;
  for (int i = 0; i < kNumJoints; ++i) sum += (j.row(i) - root).squaredNorm();
  return std::sqrt(sum / kNumJoints);
}

}  // namespace

MockStudio::MockStudio(MockOptions options) : options_(std::move(options)) {
  if (!(options_.noise >= 0.0) || !std::isfinite(options_.noise)) {
    throw Error(ErrorCode::kInvalidArgument, "mock noise must be finite and >= 0");
  }
  if (options_.fail_at_step < 0) {
    throw Error(ErrorCode::kInvalidArgument, "fail_at_step must be >= 0");
  }
}

std::string MockStudio::Translate(const TranslateRequest& request) {
  if (options_.fail_at_step > 0 && request.step == options_.fail_at_step) {
    throw Error(ErrorCode::kAdapter,
                "mock translator failure at step " + std::to_string(request.step));
  }
  Pose2D::Matrix joints = request.target2d.joints();
  if (options_.noise > 0.0) {
    Rng rng(DeriveSeed(request.seed, static_cast<std::uint64_t>(request.step)));
    std::normal_distribution<double> gauss(0.0, options_.noise * RootRms(request.target2d));
    for (int i = 0; i < kNumJoints; ++i) {
      for (int c = 0; c < 2; ++c) joints(i, c) += gauss(rng);
    }
  }
  Pose2D estimated(joints);

  std::string ref = "mock://" + request.job_id + "/step" + std::to_string(request.step);
  if (options_.render_dir) {
    const std::filesystem::path path =
        *options_.render_dir / (SafeFileStem(request.job_id, request.step) + ".ppm");
    const Raster raster =
        RenderSilhouette(estimated, options_.render_width, options_.render_height,
                         options_.background, options_.foreground);
    std::ofstream out(path, std::ios::binary);
    WritePpm(out, raster);
    if (!out) throw Error(ErrorCode::kAdapter, "cannot write " + path.string());
    ref = path.string();
  }
  std::lock_guard<std::mutex> lock(mu_);
  generated_.insert_or_assign(ref, std::move(estimated));
  return ref;
}

std::optional<Pose2D> MockStudio::Estimate(const std::string& image_ref) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = generated_.find(image_ref);
  if (it == generated_.end()) return std::nullopt;
  return it->second;
}

CommandAdapter::CommandAdapter(std::string command, std::filesystem::path work_dir)
    : command_(std::move(command)), work_dir_(std::move(work_dir)) {
  if (command_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "adapter command is empty");
  }
  std::error_code ec;
  std::filesystem::create_directories(work_dir_, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot create adapter work dir " + work_dir_.string());
  }
}

std::string CommandAdapter::Translate(const TranslateRequest& request) {
  const std::string stem = SafeFileStem(request.job_id, request.step);
  const std::filesystem::path target_file = work_dir_ / (stem + ".target.json");
  const std::filesystem::path estimate_file = work_dir_ / (stem + ".estimate.json");
  std::filesystem::remove(estimate_file);
  PoseDocument doc = MakePoseDocument(std::vector<Pose2D>{request.target2d});
  doc.metadata = {{"job_id", request.job_id},
                  {"step", request.step},
                  {"seed", request.seed}};
  WritePoseDocument(target_file, doc);

  const std::string cmd = command_ + " " + ShellQuote(request.source_image_ref) + " " +
                          ShellQuote(target_file.string()) + " " +
                          ShellQuote(estimate_file.string()) + " " +
                          std::to_string(request.seed);
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw Error(ErrorCode::kAdapter, "cannot start adapter command");
  std::string output;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe.get()) != nullptr) {
    output += buf.data();
  }
  const int status = pclose(pipe.release());
  if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw Error(ErrorCode::kAdapter, "adapter command failed at step " +
                                         std::to_string(request.step));
  }
  std::string ref = output.substr(0, output.find('\n'));
  while (!ref.empty() && (ref.back() == '\r' || ref.back() == ' ')) ref.pop_back();
  if (ref.empty()) {
    throw Error(ErrorCode::kAdapter, "adapter command printed no image ref");
  }

  std::optional<Pose2D> estimate;
  if (std::filesystem::exists(estimate_file)) {
    const std::vector<Pose2D> poses = Poses2D(ReadPoseDocument(estimate_file));
    if (!poses.empty()) estimate = poses.front();
  }
  std::lock_guard<std::mutex> lock(mu_);
  estimates_.insert_or_assign(ref, std::move(estimate));
  return ref;
}

std::optional<Pose2D> CommandAdapter::Estimate(const std::string& image_ref) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto it = estimates_.find(image_ref);
  if (it == estimates_.end()) return std::nullopt;
  return it->second;
}

}  // namespace posediv
