// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>

#include "posediv/diffusion/denoiser.h"
#include "posediv/diffusion/schedule.h"

namespace posediv {

using Rng = std::mt19937_64;

// Closed-form jump to step t (1 <= t <= T):
//   C_signal(t) p0 + C_noise(t) z,  z ~ N(0, I).
PoseMatrix DiffuseForward(const PoseMatrix& p0, int t,
                          const NoiseSchedule& schedule, Rng& rng);

// The same marginal reached by applying the per-step recurrence t times.
PoseMatrix DiffuseSequential(const PoseMatrix& p0, int t,
                             const NoiseSchedule& schedule, Rng& rng);

// Reverse process: start from N(0, I) at step T, then for t = T..1 predict
// the clean pose and re-diffuse it to step t-1. The prediction at t = 1 is
// returned. Throws Error(kSampling) if the denoiser emits non-finite values.
Pose3D SamplePose(const Denoiser& denoiser, const NoiseSchedule& schedule,
                  Rng& rng);

// |p0 - denoiser(DiffuseForward(p0, t), t)|^2 over all coordinates.
double TrainingLoss(const Denoiser& denoiser, const PoseMatrix& p0, int t,
                    const NoiseSchedule& schedule, Rng& rng);

}  // namespace posediv
