// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/pose/pose.h"

#include <cmath>

#include "posediv/error.h"

namespace posediv {

template <int D>
Pose<D>::Pose(const Matrix& joints) : joints_(joints) {
  if (!joints_.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "pose has non-finite coordinates");
  }
  if ((joints_.array() == 0.0).all()) {
    throw Error(ErrorCode::kDegeneratePose, "pose is identically zero");
  }
}

template class Pose<2>;
template class Pose<3>;

void CameraPose::Validate() const {
  if (!position.allFinite() || !look_at.allFinite() || !up.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "camera has non-finite values");
  }
  if (position == look_at) {
    throw Error(ErrorCode::kInvalidArgument,
                "camera position coincides with look_at");
  }
  if (up.squaredNorm() == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "camera up vector is zero");
  }
}

void ProjectionConfig::Validate() const {
  // Weak perspective uses the focal length as its uniform scale, so it must
  // be positive in both modes.
  if (!(focal_length > 0.0) || !std::isfinite(focal_length)) {
    throw Error(ErrorCode::kRange, "focal_length must be positive");
  }
}

}  // namespace posediv
