// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "posediv/diffusion/denoiser.h"

namespace posediv {

inline constexpr int kPoseDims = kNumJoints * 3;
inline constexpr int kTimeEmbeddingDims = 16;

// Sinusoidal embedding of the step index: pairs (sin, cos) of t / 10000^(2i/D).
Eigen::VectorXd TimeEmbedding(int t, int dims = kTimeEmbeddingDims);

// Two-layer feed-forward x0 predictor:
//   h = tanh(W1 [x; e(t)] + b1),  x0_hat = W2 h + b2
class ToyDenoiser : public Denoiser {
 public:
  struct Shape {
    int input = kPoseDims;
    int time = kTimeEmbeddingDims;
    int hidden = 64;
    int output = kPoseDims;
    friend bool operator==(const Shape&, const Shape&) = default;
  };

  // One training example: target clean pose, its noisy version and the step.
  struct Example {
    PoseMatrix clean;
    PoseMatrix noisy;
    int t = 1;
  };

  explicit ToyDenoiser(int hidden = 64);
  // Gaussian init with std 1/sqrt(fan_in); biases zero.
  static ToyDenoiser Initialized(int hidden, std::uint64_t seed);

  PoseMatrix PredictClean(const PoseMatrix& noisy, int t) const override;

  const Shape& shape() const { return shape_; }
  std::size_t ParameterCount() const;
  // Flat layout: W1 (row-major), b1, W2 (row-major), b2.
  std::vector<double> Parameters() const;
  void SetParameters(std::span<const double> params);

  // Mean over the batch of |clean - PredictClean(noisy, t)|^2, with the
  // analytic gradient in the flat parameter layout.
  double LossAndGradient(std::span<const Example> batch,
                         std::vector<double>* gradient) const;

  // Same shape and bit-identical parameters.
  friend bool operator==(const ToyDenoiser& a, const ToyDenoiser& b);

 private:
  using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                  Eigen::RowMajor>;

  Eigen::VectorXd Input(const PoseMatrix& noisy, int t) const;

  Shape shape_;
  RowMatrix w1_;
  Eigen::VectorXd b1_;
  RowMatrix w2_;
  Eigen::VectorXd b2_;
};

}  // namespace posediv
