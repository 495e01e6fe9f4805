// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "posediv/diffusion/schedule.h"
#include "posediv/pose/pose.h"

namespace posediv {

// Raw K x 3 coordinates. Intermediate diffusion states live here rather than
// in Pose3D because nothing guarantees they are valid poses.
using PoseMatrix = Pose3D::Matrix;

// x0-predicting denoiser: estimates the clean pose from the noisy pose at
// step t. Implementations must be deterministic in (noisy, t).
class Denoiser {
 public:
  virtual ~Denoiser() = default;
  virtual PoseMatrix PredictClean(const PoseMatrix& noisy, int t) const = 0;
};

// Analytic denoiser for a target distribution N(mean, variance * I).
//
// kMarginalTransport maps the step-t marginal N(c_s mean, c_s^2 var + c_n^2)
// onto the target distribution by standardizing and rescaling. When the
// input follows the step-t marginal, so does the re-diffused output at any
// earlier step, which makes the predict-then-re-diffuse sampler exact.
//
// kPosteriorMean returns E[x0 | x_t], the minimizer of the squared-error
// training loss. Under the same sampler it shrinks the sample variance.
class GaussianOracleDenoiser : public Denoiser {
 public:
  enum class Mode { kMarginalTransport, kPosteriorMean };

  GaussianOracleDenoiser(const PoseMatrix& mean, double variance,
                         NoiseSchedule schedule,
                         Mode mode = Mode::kMarginalTransport);

  PoseMatrix PredictClean(const PoseMatrix& noisy, int t) const override;

 private:
  PoseMatrix mean_;
  double variance_;
  NoiseSchedule schedule_;
  Mode mode_;
};

}  // namespace posediv
