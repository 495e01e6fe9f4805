// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/diffusion/toy_denoiser.h"

#include <cmath>
#include <random>

#include "posediv/error.h"

namespace posediv {

Eigen::VectorXd TimeEmbedding(int t, int dims) {
  Eigen::VectorXd e(dims);
  for (int i = 0; i < dims / 2; ++i) {
    const double freq = std::pow(10000.0, -2.0 * i / dims);
    e(2 * i) = std::sin(t * freq);
    e(2 * i + 1) = std::cos(t * freq);
  }
  return e;
}

ToyDenoiser::ToyDenoiser(int hidden) {
  if (hidden < 1) {
    throw Error(ErrorCode::kInvalidArgument, "hidden width must be >= 1");
  }
  shape_.hidden = hidden;
  w1_ = RowMatrix::Zero(hidden, shape_.input + shape_.time);
  b1_ = Eigen::VectorXd::Zero(hidden);
  w2_ = RowMatrix::Zero(shape_.output, hidden);
  b2_ = Eigen::VectorXd::Zero(shape_.output);
}

ToyDenoiser ToyDenoiser::Initialized(int hidden, std::uint64_t seed) {
  ToyDenoiser d(hidden);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double s1 = 1.0 / std::sqrt(static_cast<double>(d.w1_.cols()));
  const double s2 = 1.0 / std::sqrt(static_cast<double>(d.w2_.cols()));
  for (Eigen::Index i = 0; i < d.w1_.size(); ++i) d.w1_.data()[i] = s1 * normal(rng);
  for (Eigen::Index i = 0; i < d.w2_.size(); ++i) d.w2_.data()[i] = s2 * normal(rng);
  return d;
}

Eigen::VectorXd ToyDenoiser::Input(const PoseMatrix& noisy, int t) const {
  Eigen::VectorXd z(shape_.input + shape_.time);
  z.head(shape_.input) = Eigen::Map<const Eigen::VectorXd>(noisy.data(), shape_.input);
  z.tail(shape_.time) = TimeEmbedding(t, shape_.time);
  return z;
}

PoseMatrix ToyDenoiser::PredictClean(const PoseMatrix& noisy, int t) const {
  const Eigen::VectorXd h = (w1_ * Input(noisy, t) + b1_).array().tanh().matrix();
  const Eigen::VectorXd y = w2_ * h + b2_;
  PoseMatrix out;
  Eigen::Map<Eigen::VectorXd>(out.data(), shape_.output) = y;
  return out;
}

std::size_t ToyDenoiser::ParameterCount() const {
  return static_cast<std::size_t>(w1_.size() + b1_.size() + w2_.size() + b2_.size());
}

std::vector<double> ToyDenoiser::Parameters() const {
  std::vector<double> p;
  p.reserve(ParameterCount());
  p.insert(p.end(), w1_.data(), w1_.data() + w1_.size());
  p.insert(p.end(), b1_.data(), b1_.data() + b1_.size());
  p.insert(p.end(), w2_.data(), w2_.data() + w2_.size());
  p.insert(p.end(), b2_.data(), b2_.data() + b2_.size());
  return p;
}

void ToyDenoiser::SetParameters(std::span<const double> params) {
  if (params.size() != ParameterCount()) {
    throw Error(ErrorCode::kInvalidArgument, "parameter count mismatch");
  }
  const double* p = params.data();
  auto fill = [&p](double* dst, Eigen::Index n) {
    std::copy(p, p + n, dst);
    p += n;
  };
  fill(w1_.data(), w1_.size());
  fill(b1_.data(), b1_.size());
  fill(w2_.data(), w2_.size());
  fill(b2_.data(), b2_.size());
}

double ToyDenoiser::LossAndGradient(std::span<const Example> batch,
                                    std::vector<double>* gradient) const {
  if (batch.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty training batch");
  }
  RowMatrix gw1 = RowMatrix::Zero(w1_.rows(), w1_.cols());
  Eigen::VectorXd gb1 = Eigen::VectorXd::Zero(b1_.size());
  RowMatrix gw2 = RowMatrix::Zero(w2_.rows(), w2_.cols());
  Eigen::VectorXd gb2 = Eigen::VectorXd::Zero(b2_.size());

  const double inv_n = 1.0 / static_cast<double>(batch.size());
  double loss = 0.0;
  for (const Example& ex : batch) {
    const Eigen::VectorXd z = Input(ex.noisy, ex.t);
    const Eigen::VectorXd h = (w1_ * z + b1_).array().tanh().matrix();
    const Eigen::VectorXd y = w2_ * h + b2_;
    const Eigen::VectorXd target =
        Eigen::Map<const Eigen::VectorXd>(ex.clean.data(), shape_.output);
    const Eigen::VectorXd diff = y - target;
    loss += diff.squaredNorm() * inv_n;
    if (gradient == nullptr) continue;

    const Eigen::VectorXd dy = (2.0 * inv_n) * diff;
    gw2.noalias() += dy * h.transpose();
    gb2 += dy;
    const Eigen::VectorXd da =
        ((w2_.transpose() * dy).array() * (1.0 - h.array().square())).matrix();
    gw1.noalias() += da * z.transpose();
    gb1 += da;
  }
  if (gradient != nullptr) {
    gradient->clear();
    gradient->reserve(ParameterCount());
    gradient->insert(gradient->end(), gw1.data(), gw1.data() + gw1.size());
    gradient->insert(gradient->end(), gb1.data(), gb1.data() + gb1.size());
    gradient->insert(gradient->end(), gw2.data(), gw2.data() + gw2.size());
    gradient->insert(gradient->end(), gb2.data(), gb2.data() + gb2.size());
  }
  return loss;
}

bool operator==(const ToyDenoiser& a, const ToyDenoiser& b) {
  return a.shape_ == b.shape_ && a.Parameters() == b.Parameters();
}

}  // namespace posediv
