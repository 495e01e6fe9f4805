// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace posediv {

// Per-step noise weights alpha_1..alpha_T of the forward process
//
//   p(i) = sqrt(1 - alpha_i) p(i-1) + sqrt(alpha_i) z_i
//
// with cumulative signal variance prod_{i<=t} (1 - alpha_i) precomputed.
// Steps are 1-based; step 0 is the clean pose.
class NoiseSchedule {
 public:
  // alpha linearly interpolated from beta_min (step 1) to beta_max (step T).
  // Requires T >= 1 and 0 < beta_min <= beta_max < 1.
  static NoiseSchedule Linear(int steps, double beta_min, double beta_max);

  explicit NoiseSchedule(std::vector<double> alphas);

  int steps() const { return static_cast<int>(alphas_.size()); }
  double alpha(int t) const;

  double SignalVariance(int t) const;
  // 1 - SignalVariance(t); the two always sum to exactly 1.0.
  double NoiseVariance(int t) const;
  double SignalCoefficient(int t) const;
  double NoiseCoefficient(int t) const;

  double beta_min() const { return beta_min_; }
  double beta_max() const { return beta_max_; }
  // Short identifier recorded as provenance, e.g. "linear:1000:0.0001:0.02".
  std::string Id() const;

 private:
  void CheckStep(int t) const;

  std::vector<double> alphas_;
  std::vector<double> signal_variance_;  // index t, 0..T
  double beta_min_ = 0.0;
  double beta_max_ = 0.0;
  bool linear_ = false;
};

}  // namespace posediv
