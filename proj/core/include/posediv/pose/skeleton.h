// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace posediv {

inline constexpr int kNumJoints = 17;
inline constexpr int kNumTranslatorJoints = 14;

// Joint naming and the handful of indices the metric needs. The default is
// the 17-joint Human3.6M layout; the translator subset is the 14 joints an
// image translator consumes (pelvis, spine and head top dropped).
struct Skeleton {
  std::string name;
  std::array<std::string, kNumJoints> joint_names;
  int nose = 0;
  int neck = 0;
  int root = 0;
  std::array<int, kNumTranslatorJoints> translator_subset{};

  static Skeleton Human36M();

  // Throws Error(kInvalidArgument) when indices collide or are out of range.
  void Validate() const;

  // Returns -1 when absent.
  int IndexOf(const std::string& joint) const;
};

namespace h36m {
inline constexpr int kPelvis = 0;
inline constexpr int kRightHip = 1;
inline constexpr int kRightKnee = 2;
inline constexpr int kRightFoot = 3;
inline constexpr int kLeftHip = 4;
inline constexpr int kLeftKnee = 5;
inline constexpr int kLeftFoot = 6;
inline constexpr int kSpine = 7;
inline constexpr int kThorax = 8;
inline constexpr int kNose = 9;
inline constexpr int kHead = 10;
inline constexpr int kLeftShoulder = 11;
inline constexpr int kLeftElbow = 12;
inline constexpr int kLeftWrist = 13;
inline constexpr int kRightShoulder = 14;
inline constexpr int kRightElbow = 15;
inline constexpr int kRightWrist = 16;

// Parent of each joint in the kinematic tree; the pelvis is its own parent.
inline constexpr std::array<int, kNumJoints> kParents = {
    0, 0, 1, 2, 0, 4, 5, 0, 7, 8, 9, 8, 11, 12, 8, 14, 15};
}  // namespace h36m

}  // namespace posediv
