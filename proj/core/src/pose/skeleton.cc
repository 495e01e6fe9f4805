// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/pose/skeleton.h"

#include <set>

#include "posediv/error.h"

namespace posediv {

Skeleton Skeleton::Human36M() {
  Skeleton s;
  s.name = "human36m";
  s.joint_names = {"pelvis",     "right_hip",     "right_knee", "right_foot",
                   "left_hip",   "left_knee",     "left_foot",  "spine",
                   "thorax",     "nose",          "head",       "left_shoulder",
                   "left_elbow", "left_wrist",    "right_shoulder",
                   "right_elbow", "right_wrist"};
  s.nose = h36m::kNose;
  s.neck = h36m::kThorax;
  s.root = h36m::kPelvis;
  s.translator_subset = {h36m::kNose,          h36m::kThorax,
                         h36m::kRightShoulder, h36m::kRightElbow,
                         h36m::kRightWrist,    h36m::kLeftShoulder,
                         h36m::kLeftElbow,     h36m::kLeftWrist,
                         h36m::kRightHip,      h36m::kRightKnee,
                         h36m::kRightFoot,     h36m::kLeftHip,
                         h36m::kLeftKnee,      h36m::kLeftFoot};
  return s;
}

void Skeleton::Validate() const {
  auto in_range = [](int i) { return i >= 0 && i < kNumJoints; };
  if (!in_range(nose) || !in_range(neck) || !in_range(root)) {
    throw Error(ErrorCode::kInvalidArgument,
                "skeleton: nose/neck/root index out of range");
  }
  if (nose == neck || nose == root || neck == root) {
    throw Error(ErrorCode::kInvalidArgument,
                "skeleton: nose, neck and root must be distinct joints");
  }
  std::set<int> seen;
  for (int j : translator_subset) {
    if (!in_range(j) || !seen.insert(j).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "skeleton: translator subset must hold 14 distinct joints");
    }
  }
  std::set<std::string> names(joint_names.begin(), joint_names.end());
  if (names.size() != joint_names.size()) {
    throw Error(ErrorCode::kInvalidArgument, "skeleton: duplicate joint name");
  }
}

int Skeleton::IndexOf(const std::string& joint) const {
  for (int i = 0; i < kNumJoints; ++i) {
    if (joint_names[i] == joint) return i;
  }
  return -1;
}

}  // namespace posediv
