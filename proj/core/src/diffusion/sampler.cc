// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/diffusion/sampler.h"

#include <cmath>

#include "posediv/error.h"

namespace posediv {
namespace {

PoseMatrix StandardNormal(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  PoseMatrix z;
  for (Eigen::Index i = 0; i < z.size(); ++i) z.data()[i] = normal(rng);
  return z;
}

void CheckForwardStep(int t, const NoiseSchedule& schedule) {
  if (t < 1 || t > schedule.steps()) {
    throw Error(ErrorCode::kRange, "diffusion step out of range");
  }
}

}  // namespace

PoseMatrix DiffuseForward(const PoseMatrix& p0, int t,
                          const NoiseSchedule& schedule, Rng& rng) {
  CheckForwardStep(t, schedule);
  return schedule.SignalCoefficient(t) * p0 +
         schedule.NoiseCoefficient(t) * StandardNormal(rng);
}

PoseMatrix DiffuseSequential(const PoseMatrix& p0, int t,
                             const NoiseSchedule& schedule, Rng& rng) {
  CheckForwardStep(t, schedule);
  PoseMatrix p = p0;
  for (int i = 1; i <= t; ++i) {
    const double a = schedule.alpha(i);
    p = std::sqrt(1.0 - a) * p + std::sqrt(a) * StandardNormal(rng);
  }
  return p;
}

Pose3D SamplePose(const Denoiser& denoiser, const NoiseSchedule& schedule,
                  Rng& rng) {
  PoseMatrix noisy = StandardNormal(rng);
  for (int t = schedule.steps(); t >= 1; --t) {
    const PoseMatrix clean = denoiser.PredictClean(noisy, t);
    if (!clean.allFinite()) {
      throw Error(ErrorCode::kSampling, "denoiser produced non-finite values");
    }
    if (t == 1) return Pose3D(clean);
    noisy = DiffuseForward(clean, t - 1, schedule, rng);
  }
  // Unreachable: schedules always have at least one step.
  throw Error(ErrorCode::kSampling, "empty schedule");
}

double TrainingLoss(const Denoiser& denoiser, const PoseMatrix& p0, int t,
                    const NoiseSchedule& schedule, Rng& rng) {
  const PoseMatrix noisy = DiffuseForward(p0, t, schedule, rng);
  return (p0 - denoiser.PredictClean(noisy, t)).squaredNorm();
}

}  // namespace posediv
