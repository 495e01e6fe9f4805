// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/pipeline/raster.h"

#include <algorithm>
#include <cmath>

#include "posediv/error.h"

namespace posediv {
namespace {

double SegmentDistance(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                       const Eigen::Vector2d& b) {
  const Eigen::Vector2d ab = b - a;
  const double len2 = ab.squaredNorm();
  const double t = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
  return (p - (a + t * ab)).norm();
}

}  // namespace

Raster RenderSilhouette(const Pose2D& pose, int width, int height, Rgb background,
                        Rgb foreground, int radius, int margin) {
  if (width <= 2 * margin || height <= 2 * margin) {
    throw Error(ErrorCode::kInvalidArgument, "canvas too small for the margin");
  }
  Raster raster(width, height, background);
  const auto& j = pose.joints();
  const Eigen::Vector2d lo = j.colwise().minCoeff().transpose();
  const Eigen::Vector2d hi = j.colwise().maxCoeff().transpose();
  const Eigen::Vector2d extent = (hi - lo).cwiseMax(1e-9);
  const double scale = std::min((width - 2.0 * margin) / extent.x(),
                                (height - 2.0 * margin) / extent.y());
  const Eigen::Vector2d offset(
      (width - scale * extent.x()) / 2.0, (height - scale * extent.y()) / 2.0);
  auto to_pixel = [&](int i) {
    return Eigen::Vector2d(offset + scale * (j.row(i).transpose() - lo));
  };

  for (int child = 1; child < kNumJoints; ++child) {
    const Eigen::Vector2d a = to_pixel(h36m::kParents[child]);
    const Eigen::Vector2d b = to_pixel(child);
    const int x0 = std::max(0, static_cast<int>(std::floor(std::min(a.x(), b.x()) - radius)));
    const int x1 = std::min(width - 1, static_cast<int>(std::ceil(std::max(a.x(), b.x()) + radius)));
    const int y0 = std::max(0, static_cast<int>(std::floor(std::min(a.y(), b.y()) - radius)));
    const int y1 = std::min(height - 1, static_cast<int>(std::ceil(std::max(a.y(), b.y()) + radius)));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        if (SegmentDistance(Eigen::Vector2d(x + 0.5, y + 0.5), a, b) <= radius) {
          raster.at(x, y) = foreground;
        }
      }
    }
  }
  return raster;
}

}  // namespace posediv
