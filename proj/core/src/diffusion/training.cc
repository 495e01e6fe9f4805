// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/diffusion/training.h"

#include <cmath>

#include "posediv/error.h"

namespace posediv {
namespace {

constexpr int kEvaluationSamples = 2048;
constexpr double kAdamBeta1 = 0.9;
constexpr double kAdamBeta2 = 0.999;
constexpr double kAdamEpsilon = 1e-8;

// Stream ids keep init, batching and evaluation noise independent.
std::uint64_t SubSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

void TrainingConfig::Validate() const {
  if (hidden < 1) throw Error(ErrorCode::kRange, "hidden must be >= 1");
  if (iterations < 0) throw Error(ErrorCode::kRange, "iterations must be >= 0");
  if (batch_size < 1) throw Error(ErrorCode::kRange, "batch_size must be >= 1");
  if (!(learning_rate > 0.0)) {
    throw Error(ErrorCode::kRange, "learning_rate must be positive");
  }
}

double MeanTrainingLoss(const Denoiser& denoiser, std::span<const Pose3D> dataset,
                        const NoiseSchedule& schedule, int samples,
                        std::uint64_t seed) {
  if (dataset.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty dataset");
  }
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, dataset.size() - 1);
  std::uniform_int_distribution<int> step(1, schedule.steps());
  double total = 0.0;
  for (int i = 0; i < samples; ++i) {
    const PoseMatrix& p0 = dataset[pick(rng)].joints();
    total += TrainingLoss(denoiser, p0, step(rng), schedule, rng);
  }
  return total / samples;
}

TrainingResult TrainToyDenoiser(std::span<const Pose3D> dataset,
                                const NoiseSchedule& schedule,
                                const TrainingConfig& config) {
  config.Validate();
  if (dataset.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot train on an empty dataset");
  }
  TrainingResult result{ToyDenoiser::Initialized(config.hidden, SubSeed(config.seed, 0)),
                        0.0, 0.0, {}};
  const std::uint64_t eval_seed = SubSeed(config.seed, 2);
  result.initial_loss = MeanTrainingLoss(result.denoiser, dataset, schedule,
                                         kEvaluationSamples, eval_seed);
  if (config.iterations == 0) {
    result.final_loss = result.initial_loss;
    return result;
  }

  Rng rng(SubSeed(config.seed, 1));
  std::uniform_int_distribution<std::size_t> pick(0, dataset.size() - 1);
  std::uniform_int_distribution<int> step(1, schedule.steps());

  std::vector<double> params = result.denoiser.Parameters();
  std::vector<double> m(params.size(), 0.0);
  std::vector<double> v(params.size(), 0.0);
  std::vector<double> grad;
  std::vector<ToyDenoiser::Example> batch(config.batch_size);
  result.batch_losses.reserve(config.iterations);

  double beta1_power = 1.0;
  double beta2_power = 1.0;
  for (int it = 0; it < config.iterations; ++it) {
    for (auto& ex : batch) {
      ex.clean = dataset[pick(rng)].joints();
      ex.t = step(rng);
      ex.noisy = DiffuseForward(ex.clean, ex.t, schedule, rng);
    }
    const double loss = result.denoiser.LossAndGradient(batch, &grad);
    if (!std::isfinite(loss)) {
      throw Error(ErrorCode::kTraining, "training diverged (non-finite loss)");
    }
    result.batch_losses.push_back(loss);

    beta1_power *= kAdamBeta1;
    beta2_power *= kAdamBeta2;
    const double lr = config.learning_rate * std::sqrt(1.0 - beta2_power) /
                      (1.0 - beta1_power);
    for (std::size_t i = 0; i < params.size(); ++i) {
      m[i] = kAdamBeta1 * m[i] + (1.0 - kAdamBeta1) * grad[i];
      v[i] = kAdamBeta2 * v[i] + (1.0 - kAdamBeta2) * grad[i] * grad[i];
      params[i] -= lr * m[i] / (std::sqrt(v[i]) + kAdamEpsilon);
    }
    result.denoiser.SetParameters(params);
  }

  result.final_loss = MeanTrainingLoss(result.denoiser, dataset, schedule,
                                       kEvaluationSamples, eval_seed);
  if (!std::isfinite(result.final_loss)) {
    throw Error(ErrorCode::kTraining, "training diverged (non-finite loss)");
  }
  return result;
}

}  // namespace posediv
