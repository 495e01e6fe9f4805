// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/pipeline/mask.h"

#include <algorithm>
#include <cmath>

#include "posediv/error.h"

namespace posediv {

Raster::Raster(int w, int h, Rgb fill)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {
  if (w <= 0 || h <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "raster dimensions must be positive");
  }
}

long long IntersectionArea(const Box& a, const Box& b) {
  const long long w = std::min(a.Right(), b.Right()) - std::max(a.x, b.x);
  const long long h = std::min(a.Bottom(), b.Bottom()) - std::max(a.y, b.y);
  return (w > 0 && h > 0) ? w * h : 0;
}

BinaryMask::BinaryMask(int width, int height) : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "mask dimensions must be positive");
  }
  bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

std::size_t BinaryMask::Count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::optional<Box> BinaryMask::BoundingBox() const {
  int x0 = width_, y0 = height_, x1 = -1, y1 = -1;
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) {
      if (!Get(x, y)) continue;
      x0 = std::min(x0, x);
      y0 = std::min(y0, y);
      x1 = std::max(x1, x);
      y1 = std::max(y1, y);
    }
  }
  if (x1 < 0) return std::nullopt;
  return Box{x0, y0, x1 - x0 + 1, y1 - y0 + 1};
}

BinaryMask ExtractMask(const Raster& raster, Rgb mono_color, double tolerance) {
  if (raster.width <= 0 || raster.height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "cannot extract a mask from an empty raster");
  }
  BinaryMask mask(raster.width, raster.height);
  for (int y = 0; y < raster.height; ++y) {
    for (int x = 0; x < raster.width; ++x) {
      const Rgb& p = raster.at(x, y);
      double sq = 0.0;
      for (int c = 0; c < 3; ++c) {
        const double d = static_cast<double>(p[c]) - mono_color[c];
        sq += d * d;
      }
      mask.Set(x, y, std::sqrt(sq) > tolerance);
    }
  }
  return mask;
}

namespace {

// Dilation takes the max over the in-canvas 3x3 neighbourhood, erosion the
// min.
template <bool kDilate>
BinaryMask Morph(const BinaryMask& in) {
  BinaryMask out(in.width(), in.height());
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) {
      bool v = !kDilate;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const int nx = x + dx;
          const int ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= in.width() || ny >= in.height()) continue;
          if (kDilate) {
            v = v || in.Get(nx, ny);
          } else {
            v = v && in.Get(nx, ny);
          }
        }
      }
      out.Set(x, y, v);
    }
  }
  return out;
}

}  // namespace

BinaryMask Dilate(const BinaryMask& mask) { return Morph<true>(mask); }
BinaryMask Erode(const BinaryMask& mask) { return Morph<false>(mask); }

BinaryMask MorphCleanup(const BinaryMask& mask) {
  BinaryMask m = mask;
  for (int i = 0; i < kCleanupDilations; ++i) m = Dilate(m);
  for (int i = 0; i < kCleanupErosions; ++i) m = Erode(m);
  return m;
}

}  // namespace posediv
