// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "posediv/diffusion/sampler.h"
#include "posediv/pose/pose.h"

namespace posediv {

// Root-centered Human3.6M-layout poses in metres, z up, facing +y.
enum class CanonicalPoseKind { kStanding, kArmsRaised, kSquatReach };

Pose3D CanonicalPose(CanonicalPoseKind kind);

// Walks the kinematic tree from the pelvis and rotates every bone by a
// random rotation of angle up to `max_bone_angle` radians (composed with its
// parent's), then applies a uniform random yaw about +z.
Pose3D RandomArticulatedPose(Rng& rng, double max_bone_angle = 0.6,
                             CanonicalPoseKind base = CanonicalPoseKind::kStanding);

// K x 3 standard-normal coordinates scaled to unit Frobenius norm.
Pose3D RandomUnitPose(Rng& rng);

// `count` draws from an equal-weight mixture of N(mode, sigma^2 I).
std::vector<Pose3D> GaussianMixtureDataset(std::span<const Pose3D> modes,
                                           double sigma, int count, Rng& rng);

}  // namespace posediv
