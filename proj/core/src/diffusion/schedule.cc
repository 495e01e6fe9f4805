// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/diffusion/schedule.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "posediv/error.h"

namespace posediv {

NoiseSchedule NoiseSchedule::Linear(int steps, double beta_min, double beta_max) {
  if (steps < 1) {
    throw Error(ErrorCode::kRange, "schedule needs at least one step");
  }
  if (!(beta_min > 0.0) || !(beta_min <= beta_max) || !(beta_max < 1.0)) {
    throw Error(ErrorCode::kRange,
                "schedule bounds must satisfy 0 < beta_min <= beta_max < 1");
  }
  std::vector<double> alphas(steps);
  for (int i = 0; i < steps; ++i) {
    const double f = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
    alphas[i] = beta_min + f * (beta_max - beta_min);
  }
  NoiseSchedule s(std::move(alphas));
  s.beta_min_ = beta_min;
  s.beta_max_ = beta_max;
  s.linear_ = true;
  return s;
}

NoiseSchedule::NoiseSchedule(std::vector<double> alphas)
    : alphas_(std::move(alphas)) {
  if (alphas_.empty()) {
    throw Error(ErrorCode::kRange, "schedule needs at least one step");
  }
  signal_variance_.resize(alphas_.size() + 1);
  signal_variance_[0] = 1.0;
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    const double a = alphas_[i];
    if (!(a > 0.0 && a < 1.0)) {
      throw Error(ErrorCode::kRange, "every alpha must lie in (0, 1)");
    }
    signal_variance_[i + 1] = signal_variance_[i] * (1.0 - a);
  }
  const auto [lo, hi] = std::minmax_element(alphas_.begin(), alphas_.end());
  beta_min_ = *lo;
  beta_max_ = *hi;
}

void NoiseSchedule::CheckStep(int t) const {
  if (t < 0 || t > steps()) {
    throw Error(ErrorCode::kRange, "diffusion step out of range");
  }
}

double NoiseSchedule::alpha(int t) const {
  if (t < 1 || t > steps()) {
    throw Error(ErrorCode::kRange, "diffusion step out of range");
  }
  return alphas_[t - 1];
}

double NoiseSchedule::SignalVariance(int t) const {
  CheckStep(t);
  return signal_variance_[t];
}

double NoiseSchedule::NoiseVariance(int t) const {
  return 1.0 - SignalVariance(t);
}

double NoiseSchedule::SignalCoefficient(int t) const {
  return std::sqrt(SignalVariance(t));
}

double NoiseSchedule::NoiseCoefficient(int t) const {
  return std::sqrt(NoiseVariance(t));
}

std::string NoiseSchedule::Id() const {
  std::ostringstream os;
  os << (linear_ ? "linear:" : "custom:") << steps() << ':' << beta_min_ << ':'
     << beta_max_;
  return os.str();
}

}  // namespace posediv
