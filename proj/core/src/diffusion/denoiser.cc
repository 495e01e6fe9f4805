// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/diffusion/denoiser.h"

#include <cmath>

#include "posediv/error.h"

namespace posediv {

GaussianOracleDenoiser::GaussianOracleDenoiser(const PoseMatrix& mean,
                                               double variance,
                                               NoiseSchedule schedule, Mode mode)
    : mean_(mean), variance_(variance), schedule_(std::move(schedule)), mode_(mode) {
  if (!(variance_ >= 0.0) || !std::isfinite(variance_)) {
    throw Error(ErrorCode::kInvalidArgument, "oracle variance must be >= 0");
  }
  if (!mean_.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "oracle mean must be finite");
  }
}

PoseMatrix GaussianOracleDenoiser::PredictClean(const PoseMatrix& noisy,
                                                int t) const {
  if (variance_ == 0.0) return mean_;
  const double cs = schedule_.SignalCoefficient(t);
  const double marginal_var =
      schedule_.SignalVariance(t) * variance_ + schedule_.NoiseVariance(t);
  const PoseMatrix residual = noisy - cs * mean_;
  if (mode_ == Mode::kMarginalTransport) {
    return mean_ + std::sqrt(variance_ / marginal_var) * residual;
  }
  return mean_ + (variance_ * cs / marginal_var) * residual;
}

}  // namespace posediv
