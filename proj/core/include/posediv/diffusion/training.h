// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "posediv/diffusion/sampler.h"
#include "posediv/diffusion/toy_denoiser.h"

namespace posediv {

struct TrainingConfig {
  int hidden = 64;
  int iterations = 20000;
  int batch_size = 64;
  double learning_rate = 1e-3;  // Adam
  std::uint64_t seed = 0;

  void Validate() const;
};

struct TrainingResult {
  ToyDenoiser denoiser;
  double initial_loss = 0.0;  // mean loss of the untrained network
  double final_loss = 0.0;    // same evaluation after training
  std::vector<double> batch_losses;
};

// Minibatch Adam on TrainingLoss with steps t ~ U{1..T} and poses drawn
// uniformly from `dataset`. initial_loss/final_loss are measured on a fixed
// evaluation draw (same noise for both). Throws Error(kInvalidArgument) on an
// empty dataset and Error(kTraining) if the loss stops being finite.
TrainingResult TrainToyDenoiser(std::span<const Pose3D> dataset,
                                const NoiseSchedule& schedule,
                                const TrainingConfig& config);

// Mean TrainingLoss over `samples` draws of (pose, t) with a dedicated rng.
double MeanTrainingLoss(const Denoiser& denoiser, std::span<const Pose3D> dataset,
                        const NoiseSchedule& schedule, int samples,
                        std::uint64_t seed);

}  // namespace posediv
